"""skeinkit: exact bracket and colored-invariant computations for link diagrams.

Submodules:

* ``poly``     Laurent polynomials in A, unreduced rational functions, and
               the q-presentation used for coefficient series.
* ``quantum``  loop values, triangle/vertex coefficients, twist formulas.
* ``diagram``  planar-diagram codes: parsing, validation, orientation,
               smoothing states, adequacy, mirrors, cabling, sweep plans,
               and the built-in diagram catalog.
* ``construct`` programmatic diagram builders (twist regions, two-bridge
               closures) used to generate the catalog.
* ``tl``       the diagrammatic idempotent algebra on n strands: planar
               matchings, composition, recursively built projectors, and
               closed-network evaluation.
* ``jones``    bracket evaluation (brute force and sweep), cabling-based
               colored invariants, reduced/unreduced forms.
* ``tail``     stable coefficient series: normalization, windowed
               comparison, extraction, stabilization scans.
* ``cli``      the ``skeinkit`` command-line tool.
"""

__version__ = "0.1.0"

__all__ = [
    "poly", "quantum", "diagram", "construct", "tl", "jones", "tail", "cli",
]
