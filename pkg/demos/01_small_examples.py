"""The three classical minimal examples, checked exhaustively.

Each is the smallest non-2-colourable hypergraph for its edge size: the
triangle for size 2, the Fano plane for size 3, the Seymour-Toft
hypergraph for size 4.  We print their exact weights, count proper
colourings (zero for all three), and probe edge-criticality: deleting any
single edge makes each of them colourable.
"""

from propb import (
    enumerate_proper,
    fano,
    is_edge_critical,
    min_edge_size,
    q_value,
    serialize,
    seymour_toft,
    triangle,
)


def main():
    for build in (triangle, fano, seymour_toft):
        h = build()
        census = enumerate_proper(h)
        critical, _ = is_edge_critical(h)
        print(f"{build.__name__}:")
        print(f"  vertices {h.v}, edges {h.edge_count}, smallest edge {min_edge_size(h)}")
        print(f"  weight q = {q_value(h)} = {q_value(h).decimal_str()}")
        print(f"  proper 2-colourings: {census.total_proper}")
        print(f"  edge-critical: {'yes' if critical else 'no'}")
        print()

    print("the triangle as a text document:")
    print(serialize(triangle()), end="")


if __name__ == "__main__":
    main()
