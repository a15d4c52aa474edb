"""Turning a facet order into a cover, one attached simplex at a time."""
from virtualcm import (
    SimplicialComplex,
    ToricContext,
    check_proposition,
    construct_cover,
    verify_cover,
    verify_virtual_shelling,
    xi_sets,
)
from virtualcm.io import complex_from_doc, context_from_doc, read_document

doc = read_document("example14_delta")
delta, ctx = complex_from_doc(doc), context_from_doc(doc)
order = [delta.face(f) for f in doc["facets"]]

# Ξ_i collects the faces shared with earlier facets that are not irrelevant.
for i, xi in enumerate(xi_sets(delta, order, ctx.irrelevant_complex()), start=1):
    print(f"Ξ_{i} =", xi.names())

verdict = check_proposition(delta, order, ctx)
print("conditions hold:", bool(verdict))

trace = []
cert = construct_cover(delta, order, ctx, trace=trace)
for step, case, attaching in trace:
    print(f"step {step}: case {case} attaching {attaching}")
print("Δ' =", cert.delta_prime, " ψ =", cert.psi.vertex_map)
print("virtual shelling:", verify_virtual_shelling(cert).status, " cover:", verify_cover(cert.cover).status)

# With C = {∅} the shared faces carry their vertices too, and sometimes the
# preimages already span a full simplex: that step glues it in without a new vertex.
ctx2 = ToricContext(["a0", "a1", "b0", "b1"], [[0, 1], [2, 3]])
sphere = SimplicialComplex(ctx2.vertices, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
trace = []
cert2 = construct_cover(sphere, sphere.facets, ctx2, SimplicialComplex.empty(ctx2.vertices), trace=trace)
print("\nboundary of a tetrahedron, cases:", [case for _, case, _ in trace])
print("Δ' == Δ ?", cert2.delta_prime == sphere, " cover:", verify_cover(cert2.cover).status)

# An order can also fail.  Here C = <{x0}> leaves two ridges meeting outside Ξ.
doc3 = read_document("example3x_delta")
d3 = complex_from_doc(doc3)
c3 = complex_from_doc(read_document("example3x_C"), d3.vertices)
bad = check_proposition(d3, [d3.face(f) for f in doc3["facets"]], context_from_doc(doc3), c3)
print("\nexample3x with C = <{x0}>:", bad.status, "condition", bad.condition,
      "at", bad.details["attaching"], "witness", bad.witness)
