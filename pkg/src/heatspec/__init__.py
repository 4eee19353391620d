"""Heat trace invariants of Dirac-type operators with spectral boundary conditions.

Subpackages: ``exact`` (rational and sqrt(pi) arithmetic), ``invariants``
(coefficient table, densities, Clifford data), ``ballspec`` (unit-ball
spectral oracle); modules ``debye`` and ``barnes`` hold the special-function
machinery and ``cli`` the command-line front end.
"""

__version__ = "0.1.0"
