"""
markedmcg suites - Built-in verification suites

Each module defines a SUITE with its name, a description and option defaults, and a
``run_suite(options)`` function returning a list of CheckResults.

Available suites:
- braid: braid relators and fundamental words on Dynnikov coordinates
- purebraid: pure braid relators through the half-twist expansion
- sphere: sphere mapping class group quotients and abelianization
- genus0: genus-0 presentations under the permutation and boundary-degree maps
- genus1: emission of the genus >= 1 presentations
- annulus: annulus group relations on arcs and the fractional twist
- flips: flips against matrix mutation on stock triangulations
- extension: group extensions assembled from a normal subgroup and its quotient
- fourpunct: the 4-punctured sphere quivers and the extra Z2 factors
- autgroup: tagged group law and the exceptional groups

Example:
    >>> from markedmcg.suite_utils import VerificationSuite
    >>> suite = VerificationSuite.from_module("braid")
    >>> results = suite.run({"max_n": 3, "samples": 1})
"""

# Suites are imported by name from suite_utils
__all__: list = []
