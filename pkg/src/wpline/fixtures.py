"""Named quiver fixtures for the three genus-one weight types.

The catalog holds, per weight type, the cluster-level quiver of the starting
tilting object (a product grid of two arrow chains with the composite
anti-diagonal arrows closing every square), the cluster-level result of the
documented mutation sequence (the search/replay target, including the
sink-to-source arrows), and the plain endomorphism quiver of the final
tilting object (the canonical two-vertex-with-three-arms shape, no return
arrows).  Vertex ids follow the mutation numbering: mutated vertices carry
the ids used in the sequences, the remaining ones are numbered in reading
order.  Labels name the attached objects; layout hints give (row, column)
grid positions for rendering.

Catalog names: cuboid_cluster_244, cuboid_cluster_236, tbar_cluster_333,
target_tubular_244, target_tubular_236, target_tubular_333,
endo_tubular_244, endo_tubular_236, endo_tubular_333.
"""

from __future__ import annotations

from .quiver import Quiver

# Overlay letters for the (2,3,6) fixture; ids 7..10 stand for a..d.
OVERLAY_236 = {7: "a", 8: "b", 9: "c", 10: "d"}


def _fixture(vertices, arrows, layout) -> dict:
    return {
        "quiver": Quiver.from_arrows(vertices, arrows),
        "layout": {vid: pos for vid, pos in layout.items()},
    }


def _build_catalog() -> dict[str, dict]:
    cat: dict[str, dict] = {}

    # ---- weight type (2, 4, 4): 3 x 3 grid ---------------------------------
    v244 = [
        (3, "E<0,0,0>"), (6, "E<0,1,0>"), (1, "E<0,2,0>"),
        (7, "E<0,0,1>"), (5, "E<0,1,1>"), (8, "E<0,2,1>"),
        (2, "E<0,0,2>"), (9, "E<0,1,2>"), (4, "E<0,2,2>"),
    ]
    lay244 = {3: (0, 0), 6: (0, 1), 1: (0, 2),
              7: (1, 0), 5: (1, 1), 8: (1, 2),
              2: (2, 0), 9: (2, 1), 4: (2, 2)}
    cat["cuboid_cluster_244"] = _fixture(
        v244,
        [
            (3, 6), (6, 1), (7, 5), (5, 8), (2, 9), (9, 4),   # rows
            (3, 7), (7, 2), (6, 5), (5, 9), (1, 8), (8, 4),   # columns
            (5, 3), (8, 6), (9, 7), (4, 5),                   # anti-diagonals
        ],
        lay244,
    )
    v244_t = [
        (3, "tau^-1(E*)[1]"), (6, "tau^-1(E<0,1,0>)[1]"), (1, "E<0,0,0>(x1-x2+x3)"),
        (7, "tau^-1(E<0,0,1>)[1]"), (5, "tau^-1(E(-w))[1]"), (8, "E<0,2,1>"),
        (2, "E<0,0,0>(x1+x2-x3)"), (9, "E<0,1,2>"), (4, "E<0,2,2>*"),
    ]
    arrows244_core = [
        (6, 3), (1, 6), (7, 3), (5, 3), (8, 1),
        (2, 7), (9, 2), (4, 5), (4, 9), (4, 8),
    ]
    cat["target_tubular_244"] = _fixture(v244_t, arrows244_core + [(3, 4)], lay244)
    cat["endo_tubular_244"] = _fixture(v244_t, arrows244_core, lay244)

    # ---- weight type (2, 3, 6): 2 x 5 grid ---------------------------------
    v236 = [
        (7, "E<0,0,0>"), (8, "E<0,0,1>"), (5, "E<0,0,2>"), (9, "E<0,0,3>"), (1, "E<0,0,4>"),
        (3, "E<0,1,0>"), (10, "E<0,1,1>"), (4, "E<0,1,2>"), (6, "E<0,1,3>"), (2, "E<0,1,4>"),
    ]
    lay236 = {7: (0, 0), 8: (0, 1), 5: (0, 2), 9: (0, 3), 1: (0, 4),
              3: (1, 0), 10: (1, 1), 4: (1, 2), 6: (1, 3), 2: (1, 4)}
    cat["cuboid_cluster_236"] = _fixture(
        v236,
        [
            (7, 8), (8, 5), (5, 9), (9, 1),        # top row
            (3, 10), (10, 4), (4, 6), (6, 2),      # bottom row
            (7, 3), (8, 10), (5, 4), (9, 6), (1, 2),   # columns
            (10, 7), (4, 8), (6, 5), (2, 9),       # anti-diagonals
        ],
        lay236,
    )
    v236_t = [
        (6, "tau(H)[-1]"), (9, "E<0,0,3>"), (5, "E<0,0,0>(3x3)"),
        (2, "E<0,0,0>(2x2-2x3)"), (4, "tau^-1(E<0,1,2>*)[1]"),
        (1, "E<0,0,4>**"), (10, "E<0,1,1>"), (3, "E<0,1,0>(x3)"),
        (7, "tau^-1(E<0,0,0>)[1]"), (8, "tau^-1(E<0,0,1>)[1]"),
    ]
    lay236_t = {9: (0, 1), 5: (0, 5),
                6: (1, 0), 2: (1, 3), 4: (1, 6),
                1: (2, 1), 10: (2, 2), 3: (2, 3), 7: (2, 4), 8: (2, 5)}
    arrows236_core = [
        (9, 5), (5, 4),
        (6, 9), (6, 1), (6, 2), (2, 4),
        (1, 10), (10, 3), (3, 7), (7, 8), (8, 4),
    ]
    cat["target_tubular_236"] = _fixture(v236_t, arrows236_core + [(4, 6)], lay236_t)
    cat["endo_tubular_236"] = _fixture(v236_t, arrows236_core, lay236_t)

    # ---- weight type (3, 3, 3): hub-and-arms shape --------------------------
    v333 = [
        (4, "E<0,0,0>"),
        (5, "E<1,0,0>"), (6, "E<0,1,0>"), (7, "E<0,0,1>"),
        (8, "G"),
        (1, "E<0,1,1>"), (2, "E<1,0,1>"), (3, "E<1,1,0>"),
    ]
    lay333 = {4: (1, 0), 5: (0, 1), 6: (1, 1), 7: (2, 1),
              8: (1, 2), 1: (0, 3), 2: (1, 3), 3: (2, 3)}
    cat["tbar_cluster_333"] = _fixture(
        v333,
        [
            (4, 5), (4, 6), (4, 7),
            (5, 8), (6, 8), (7, 8),
            (8, 4),
            (8, 1), (8, 2), (8, 3),
            (1, 5), (2, 6), (3, 7),
        ],
        lay333,
    )
    v333_t = [
        (4, "E<0,0,0>"),
        (5, "E<1,0,0>"), (6, "E<0,1,0>"), (7, "E<0,0,1>"),
        (1, "F1[-1]"), (2, "F2[-1]"), (3, "F3[-1]"),
        (8, "G"),
    ]
    lay333_t = {4: (1, 0), 5: (0, 1), 6: (1, 1), 7: (2, 1),
                1: (0, 2), 2: (1, 2), 3: (2, 2), 8: (1, 3)}
    arrows333_core = [
        (4, 5), (5, 1), (1, 8),
        (4, 6), (6, 2), (2, 8),
        (4, 7), (7, 3), (3, 8),
    ]
    cat["target_tubular_333"] = _fixture(v333_t, arrows333_core + [(8, 4)], lay333_t)
    cat["endo_tubular_333"] = _fixture(v333_t, arrows333_core, lay333_t)

    return cat


_CATALOG = _build_catalog()

# Mutation sequences that carry each cluster start fixture to its target.
DOCUMENTED_SEQUENCES = {
    "244": [1, 2, 3, 4, 5],
    "236": [1, 2, 3, 4, 5, 6, 1],
    "333": [1, 2, 3],
}


def fixture_names() -> list[str]:
    return sorted(_CATALOG)


def fixture(name: str) -> Quiver:
    if name not in _CATALOG:
        raise KeyError(f"unknown fixture {name!r}")
    return _CATALOG[name]["quiver"]


def fixture_layout(name: str) -> dict[int, tuple[int, int]]:
    if name not in _CATALOG:
        raise KeyError(f"unknown fixture {name!r}")
    return dict(_CATALOG[name]["layout"])


def fixture_json(name: str) -> dict:
    q = fixture(name)
    data = q.to_json_dict()
    data["layout"] = {str(v): list(pos) for v, pos in fixture_layout(name).items()}
    return data
