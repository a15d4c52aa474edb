"""Links of duplicated vertices, and the dual-graph route to a virtual shelling."""
from virtualcm import corollary_order, link_decomposition, reduced_homology
from virtualcm.io import certificate_from_doc, complex_from_doc, context_from_doc, read_document

cert = certificate_from_doc(read_document("example3x_cert"))
delta = cert.delta
print("Δ has", len(delta.facets), "facets; link(x0) =", delta.link(["x0"]))
print("H~(link(x0)) =", reduced_homology(delta.link(["x0"])).nonzero())

# x0 has two preimages in Δ'.  Each one contributes a piece of the link,
# and each piece is itself virtually shellable over the smaller context.
ld = link_decomposition(cert, "x0")
for comp in ld.components:
    print(f"  over {comp.vertex}: {comp.complex}  ->", comp.verdict.status)
print("pieces cover the link:", ld.union_ok, " overlaps irrelevant:", not ld.bad_intersections)

# The corollary: a relevant-connected complex whose dual graph is a tree.
for name in ("example14_delta", "example3x_delta"):
    doc = read_document(name)
    v = corollary_order(complex_from_doc(doc), context_from_doc(doc))
    d = v.details
    print(f"\n{name}: {v.status}  tree={d['tree']}  "
          f"H_{d['relative_homology_degree']}(Δ, Δ∩B; Z) rank {d['relative_homology']['rank']}")
    if v:
        print("  order:", d["order"])
    else:
        print("  cycle:", v.witness)
