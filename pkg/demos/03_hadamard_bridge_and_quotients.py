"""
Generalized Hadamard matrices and quotient covers
=================================================

Covers with n = r*c are the same thing as generalized Hadamard matrices
over the deck group: normalizing the arc matrix and reading its rows as
group-ring elements turns the distance-regularity condition into the
Hadamard identity H . H* = n I + c G (J - I).  Quotienting the deck
group by a subgroup H maps an (n, r, c) cover to an (n, r/|H|, |H| c)
cover, so one large cover yields a tower of smaller ones.
"""

from __future__ import annotations

from drackn.constructions import cover_to_gh, dcff, gh_to_cover, gh_validate, thas_somma
from drackn.covers import drackn_verify, quotient
from drackn.groups import GroupRingElement

# An 8-fold cover of K_16 on 128 vertices from a skew product on GF(2^3).
f = dcff(1, 3)
cert = drackn_verify(f)
print("dcff cover:", cert.params, "deck group", f.group)

# Quotient by each of the seven order-2 subgroups of the deck group
# (Z/2)^3: every quotient is a (16, 4, 4) cover.
for gen in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)):
    q = quotient(f, [gen])
    qcert = drackn_verify(q)
    print(f"  quotient by <{gen}>: {qcert.params}")

# Two steps down: quotient by an order-4 subgroup gives (16, 2, 8).
q2 = quotient(f, [(1, 0, 0), (0, 1, 0)])
print("quotient by an order-4 subgroup:", drackn_verify(q2).params)

# The Hadamard bridge on the 9-point cover (here n = r*c = 9).
g = thas_somma(3, 2)
h = cover_to_gh(g)
print("generalized Hadamard over", h.group, "valid:", gh_validate(h))

# The defining identity in the integral group ring Z[Z/3]: row u times
# the conjugate of row v is 9 e_0 on the diagonal and 3 (sum of the
# group) off it.
group = h.group
e0 = GroupRingElement.identity(group)
gsum = GroupRingElement.group_sum(group)
for u, v in ((0, 0), (0, 1), (3, 7)):
    acc = GroupRingElement.zero(group)
    for w in range(h.n):
        acc = acc + GroupRingElement.from_element(
            group, group.sub(h.entry(u, w), h.entry(v, w))
        )
    expected = 9 * e0 if u == v else 3 * gsum
    assert acc == expected
    print(f"  row {u} . row {v}* = {acc.counts} (coefficients on Z/3)")

# And back: the matrix reconstructs the cover it came from, exactly.
back, back_cert = gh_to_cover(h)
assert back == g
print("round trip recovers the original arc matrix:", back == g)
print("recovered parameters:", back_cert.params)
