"""Combinatorics of rectangular tableaux, hourglass plabic graphs and web diagrams.

The package is organized bottom-up:

- ``perms``, ``tableaux``: permutations and rectangular Young tableaux with
  promotion/evacuation and promotion permutations.
- ``planar_map``: disk-embedded bicolored multigraphs as rotation systems;
  the shared substrate for everything drawn in a disk.
- ``hourglass``: degree-4 graphs with hourglass edges, trip permutations and
  the tableau correspondence; local moves.
- ``growth``: lattice-word growth of hourglass graphs from tableaux.
- ``webs``: trivalent bicolored webs, skein reduction, exhaustive
  enumeration of non-elliptic webs, sink contraction.
- ``dimers``: perfect matchings of plabic graphs and the triple-dimer to
  web reduction.
- ``plucker``: exact evaluation of polynomials in maximal minors.
- ``compatibility``: matchings compatible with web colorings, dual webs and
  dual matchings.
- ``catalog``: bundled graphs/polynomials for the quadratic and cubic
  cluster variables, and the bundled web atlas.
- ``render``, ``cli``: deterministic SVG drawings and the command line.
"""

__version__ = "0.1.0"
