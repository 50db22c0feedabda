"""Anatomy of a regular benzenoid strip.

A strip is described by one shape letter per fragment (W, N, R, L) plus
the tier length n. This walk-through parses a few descriptions, derives
their interface profiles, and realizes one of them as an explicit graph.
"""

from zzstrips import (
    build_graph,
    interface_profile,
    parse_strip,
    shapes_from_graph,
    validate,
)


def describe(text: str) -> None:
    spec = parse_strip(text)
    profile = interface_profile(spec)
    report = validate(spec)
    print(f"{text!r}  ->  shapes {''.join(spec.shapes)}, n={spec.n}, {spec.m} tiers")
    for k in range(1, profile.m + 1):
        print(f"    interface {k}: {profile.size(k)} vertical bonds, order {profile.order(k)}")
    verdict = "valid" if report.is_valid else "INVALID"
    kek = "Kekulean" if report.is_kekulean else "non-Kekulean (no perfect matching)"
    print(f"    {verdict}, {kek}")
    for problem in report.problems:
        print(f"    note: {problem}")
    print()


print("=" * 64)
print("Strip descriptions")
print("=" * 64)

describe("M 2 2")        # the 2x2 parallelogram (pyrene)
describe("WWRNN 3")      # hexagonal flake, tiers 3,4,4,3
describe("WN 5")         # a single row of 5 hexagons
describe("WNNWWN 4")     # valid geometry but a negative interface order

print("=" * 64)
print("Explicit geometry of the 2x2 parallelogram")
print("=" * 64)

graph = build_graph(parse_strip("M 2 2"))
print(f"vertices: {graph.num_vertices}")
print(f"edges:    {len(graph.edges)} "
      f"({sum(1 for e in graph.edges if graph.edge_kind[e] == 'interface')} interface, "
      f"{sum(1 for e in graph.edges if graph.edge_kind[e] == 'spine')} spine)")
print(f"hexagons: {len(graph.hexagons)}")
for h in graph.hexagons:
    left = graph.interface_of[h.left_vertical]
    right = graph.interface_of[h.right_vertical]
    print(f"    tier {h.tier} hexagon {h.index}: vertical bonds e{left} and e{right}")

# the shape sequence can be read back off the graph
print("shapes recovered from the graph:", "".join(shapes_from_graph(graph)))
