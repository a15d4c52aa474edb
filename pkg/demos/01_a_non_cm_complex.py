"""A pure complex on P^1 x P^2 that is not Cohen-Macaulay, and a cover that fixes it."""
from virtualcm import (
    ToricContext,
    SimplicialComplex,
    betti_hochster,
    codim,
    is_cohen_macaulay,
    saturate,
    sr_ideal,
    verify_cover,
)
from virtualcm.io import certificate_from_doc, read_document

# Variables x0,x1 (first factor) and y0,y1,y2 (second factor).
ctx = ToricContext.product_of_projective_spaces([1, 2])
delta = SimplicialComplex(ctx.vertices, [
    ["x0", "y0", "y2"],
    ["x0", "x1", "y0"],
    ["x1", "y0", "y1"],
    ["x1", "y1", "y2"],
])
print("Δ =", delta, " dim", delta.dim)

# The Stanley-Reisner ideal and its resolution.
ideal = sr_ideal(delta)
print("I_Δ =", ideal)
betti = betti_hochster(delta)
print("total Betti numbers", betti.totals, " pd", betti.pd, " codim", codim(delta))

# pd > codim, so S/I_Δ is not Cohen-Macaulay.  Reisner's criterion says where.
cm = is_cohen_macaulay(delta)
print("CM?", cm.is_cm, " bad link at", delta.vertices.format(cm.face), "in degree", cm.degree)

# Every facet meets both factors, so saturating by B changes nothing.
print("I_Δ : B^∞ == I_Δ ?", saturate(ideal, ctx.irrelevant_ideal()) == ideal)

# Splitting y2 into two vertices gives a shellable complex mapping onto Δ.
# The only face with two preimages is {y2}, which is irrelevant.
cert = certificate_from_doc(read_document("example14_cert"))
print("Δ' =", cert.delta_prime)
verdict = verify_cover(cert.cover)
print("cover:", verdict.status, "-", verdict.message)
print("faces with several preimages:", verdict.details["multi_fiber_faces"])
