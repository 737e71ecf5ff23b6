"""Combinatorial calculus of plat tangles and multiplane diagrams.

A trivial tangle is stored in plat normal form: standard bottom caps
pairing punctures (2k-1, 2k) plus a braid word on 2b strands, read
bottom to top.  Multiplane diagrams are cyclic tuples of such tangles;
their consecutive unions are certified unlinks.  On top of that sit
exact Kauffman bracket / Jones evaluation, band surgery along framed
arcs, the multiplane moves (mutual braid, perturbation, merge/split,
transfer), 2-bridge classification through the Farey graph, and the
realization of edge-colored graphs as spines of unknotted surfaces.

Letter sign convention (shared by every module): generator ``s<k>``
(+1) crosses the strand entering at position k over the strand at
k+1; ``S<k>`` is its inverse.
"""

from platcalc.braid import BraidWord
from platcalc.plat import PlatTangle, PlatLink, mirror, union, components, puncture_matching
from platcalc.laurent import LaurentPoly
from platcalc.bracket import (
    bracket_statesum,
    bracket_tl,
    certify_unlink,
    jones,
    torus_reference,
    loop_value,
    CertificateResult,
)

__version__ = "0.1.0"
