"""Exact q-series engine for m-version Rogers-Ramanujan-Slater identities.

Layers: ``fps`` (Laurent series over exact rationals), ``qkit`` (Pochhammer
and Gaussian-binomial primitives), ``cfrac`` (continued-fraction convergents),
``polyfam`` (convergent polynomial families and per-identity coefficient
polynomials), ``hyperseries`` (basic hypergeometric sums and the Watson /
Heine / Ramanujan transformations), ``catalog`` (the identity registry and
verification driver) and ``cli`` (batch front end).
"""

__version__ = "0.1.0"
