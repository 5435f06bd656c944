"""Base diagram surgery: trades, slides, and branch cut transfers.

A base diagram is a polygon plus nodes with eigenlines and branch cuts.
Trading a corner replaces it by a node, sliding moves the node along its
eigenline, and transferring re-draws a cut on the other side while the
node's monodromy re-coordinatizes the swept region.  Every move keeps
the underlying geometry equivalent; the moves below show the bookkeeping.
"""

from atfkit import (
    BaseDiagram,
    BranchCut,
    Polygon,
    build_pi0,
    ConstructionParams,
    cut_transfer,
    nodal_slide,
    nodal_trade,
    pt,
    qf,
)

square = Polygon([(0, 0), (4, 0), (4, 4), (0, 4)])
diagram = nodal_trade(BaseDiagram(polygon=square), 0, qf(1))
node = diagram.nodes[0]
print("after trading the origin corner of the 4x4 square:")
print(f"    node at {node.position}, eigen direction {node.eigen_dir}")
print(f"    cut: {' -> '.join(str(p) for p in diagram.cuts[0].path)}")
print()

slid = nodal_slide(diagram, 0, pt(2, 2))
band = slid.provenance[-1][-1]
print(f"slide to {slid.nodes[0].position}: swept distance band ({band[0]}, {band[1]})")
print()

new_cut = BranchCut(0, (slid.nodes[0].position, pt(4, 4)))
moved, push = cut_transfer(slid, 0, new_cut)
print("transfer the cut to the opposite end of the eigenline:")
print(f"    new cut: {' -> '.join(str(p) for p in moved.cuts[0].path)}")
shear = push.region_map
print(
    "    monodromy on the swept region:"
    f" [[{shear.m11},{shear.m12}],[{shear.m21},{shear.m22}]]"
    f" (det {shear.det}, trace {shear.trace})"
)
for sample in (pt(3, 1), pt(1, 3)):
    image = push.apply(sample)
    if image == sample:
        print(f"    it fixes {sample}")
    else:
        print(f"    it re-coordinatizes {sample} to {image}")

back, pull = cut_transfer(moved, 0, slid.cuts[0])
print(f"    transferring back recovers the geometry: {back.same_geometry(slid)}")
print(f"    and the composed transition is the identity: {pull.compose(push).is_identity()}")
print()

pi0 = build_pi0(ConstructionParams(4, 2, qf("1/2"), qf("1/8")))
print("the initial five-node diagram records its whole construction:")
for entry in pi0.provenance:
    if entry[0] == "trade":
        print(f"    trade corner {entry[1]} at distance {entry[2]}")
    else:
        _, idx, old, new, band = entry
        print(f"    slide node {idx} from {old} to {new}, band ({band[0]}, {band[1]})")
