"""Combinatorics and bookkeeping for low-genus spin moduli spaces.

Submodules: ``graphs`` (stable dual graphs), ``spin`` (spin boundary
divisors), ``arf`` (quadratic forms over GF(2)), ``euler`` (exact Euler
characteristics and ledgers), ``induction`` (vanishing plans and Betti
sandwiches), ``relations`` (exact linear algebra and boundary-class
replays), ``verify`` and ``cli``.
"""

__version__ = "0.1.0"
