"""A small guided tour of mutation of exceptional sequences, on A2.

The three indecomposables of the A2 path algebra (arrow 1 -> 2) are the
simples S1 = (1,0), S2 = (0,1) and the projective P1 = (1,1).  We mutate
pairs, watch the approximation degrees and signs, and verify the two
hallmark identities: the braid relation and mu_rev^2 = nu^{-1}.

Run:  python3 demos/mutation_walkthrough.py
"""
from exseq import (
    QuiverDescriptor, build_root_system, hom_dim, mu_rev, mutate, nu_inv,
    proj, rotate, shift, simple,
)

rs = build_root_system(QuiverDescriptor.standard("A", 2))
s1, s2, p1 = simple(rs, 1), simple(rs, 2), proj(rs, 1)

print("The three mutation cases on A2")
for label, pair in [
    ("extension case  (S1, S2)", (s1, s2)),
    ("epimorphism case (P1, S1)", (p1, s1)),
    ("monomorphism case (S2[1], P1[1])", (shift(s2, 1), shift(p1, 1))),
]:
    new, sign = mutate(pair, 1, "right")
    interaction = [p for p in range(-2, 3) if hom_dim(pair[0], shift(pair[1], p))]
    print(f"  {label:34s} -> {new}   approximation shift {interaction}, {sign.value}")

print()
print("Right and left mutation are mutual inverses:")
forward, _ = mutate((s1, s2), 1, "right")
back, _ = mutate(forward, 1, "left")
print(f"  (S1, S2) -> {forward} -> {back}")

print()
print("The rotation identity mu_{n-1}...mu_1 = (E_2, ..., E_n, nu^{-1} E_1):")
print(f"  rotate (S1, S2) = {rotate((s1, s2))}   and nu^-1(S1) = {nu_inv(s1)}")

print()
print("mu_rev applied twice is the termwise inverse Serre twist:")
seq = (p1, s1)
once, signs = mu_rev(seq)
twice, _ = mu_rev(once)
print(f"  {seq} --mu_rev--> {once}   (signs: {[s.value for s in signs]})")
print(f"  {once} --mu_rev--> {twice}")
print(f"  nu^-1 termwise:      {tuple(nu_inv(x) for x in seq)}")

print()
print("Braid relation mu_1 mu_2 mu_1 = mu_2 mu_1 mu_2 on an A3 sequence:")
rs3 = build_root_system(QuiverDescriptor.standard("A", 3))
triple = (simple(rs3, 1), simple(rs3, 2), simple(rs3, 3))


def mu(seq, i):
    return mutate(seq, i, "right")[0]


lhs = mu(mu(mu(triple, 1), 2), 1)
rhs = mu(mu(mu(triple, 2), 1), 2)
print(f"  lhs = {lhs}")
print(f"  rhs = {rhs}")
print(f"  equal: {lhs == rhs}")
