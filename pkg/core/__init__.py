"""dynportraits core: exact arithmetic, dynatomic polynomials, portraits and identity suites"""
