"""Exact computations with affine-descent measures on Weyl groups of types A and C.

The package computes the probability elements ``x_k`` of the descent algebra
attached to the extended Dynkin diagram, the map from semisimple classes of
``SL(n, q)`` and ``Sp(2n, q)`` to Weyl group conjugacy classes, and the shuffle
models and counting identities surrounding them.  Every probability is a
:class:`fractions.Fraction`.
"""

__version__ = "0.1.0"
