"""Rationality certificates for G/H.

``certify`` runs a backtracking rule engine: reductions (radical, product
factors, parabolic and special splittings) and terminal rules.  A positive
answer comes with a certificate tree that can be re-checked independently.
"""

# %% A type-C subgroup of maximal rank
import json

from homrat import GroupSpec, certify, parse_subgroup, parse_type
from homrat.certify import verdict_to_json


def show(group, sub, **kw):
    g = GroupSpec(parse_type(group), **kw)
    v = certify(g, parse_subgroup(sub, g.semisimple_type))
    rules = v.certificate.rules() if v.certificate else []
    print(f"{group:>6} / {sub:<60} {v.status:<8} {v.frontier or ''} {rules}")
    return v


show("C3", "maxrank:C2+A1")
show("B3", "maxrank:3A1")
show("E8", "borel:dim=9")
show("A2+A1", "maxrank:2A1+T1", radical_dim=2)
show("E6", "maxrank:D5+T1")

# %% Positive characteristic only keeps the rules that survive it
show("C2", "maxrank:2A1", characteristic=2)
show("C2", "maxrank:2A1", characteristic=3)

# %% The open cases: regular A1 in G2 and in A3
reg = "general:levi=A1,torus=0,unip=0,connected=yes,parabolic=no,kernel0=yes"
show("G2", reg)
show("A3", reg)
show("G2", reg + ",subregular=yes")

# %% JSON form of a verdict
print(json.dumps(verdict_to_json(show("G2", "maxrank:A2")), indent=2))
