"""Expanding ThA leaves and re-checking certificates.

``tha_proof_trace`` unfolds the induction behind a ThA leaf into parabolic
and special splittings.  ``validate_certificate`` recomputes every premise
from (G, H) and rejects any edited certificate.
"""

# %% Traces
from dataclasses import replace

from homrat import GroupSpec, certify, parse_subgroup, parse_type, tha_proof_trace, validate_certificate
from homrat.certify import locate_failure


def pair(group, sub):
    g = GroupSpec(parse_type(group))
    return g, parse_subgroup(sub, g.semisimple_type)


def tree(node, depth=0):
    print("  " * depth + f"{node.rule_id}  {dict(node.premises)}")
    for c in node.children:
        tree(c, depth + 1)


for group, sub in [("C2", "maxrank:2A1"), ("A2", "maxrank:A1+T1"), ("G2", "maxrank:A2"), ("C4", "maxrank:2C2")]:
    g, h = pair(group, sub)
    print(f"-- {group} > {sub[8:]}")
    tree(tha_proof_trace(g, h.subgroup))

# %% Validation and tampering
g, h = pair("A2+A1", "maxrank:2A1+T1")
v = certify(g, h)
print("valid:", validate_certificate(g, h, v))
bad = replace(v, invariants=replace(v.invariants, dim_quotient=60))
print("edited dimension ->", locate_failure(g, h, bad))
bad = replace(v, certificate=replace(v.certificate, rule_id="R-DIM13"))
print("swapped rule ->", locate_failure(g, h, bad))
