#!/usr/bin/env python3
"""Regenerates the fixture files in this directory."""
import json
import math
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def dump(name, simplices):
    with open(os.path.join(HERE, name), "w") as f:
        f.write("[\n")
        rows = []
        for s in simplices:
            verts, value = s[0], s[1]
            entry = {"vertices": sorted(verts), "value": value}
            if len(s) > 2:
                entry["rank"] = s[2]
            rows.append("  " + json.dumps(entry))
        f.write(",\n".join(rows))
        f.write("\n]\n")


def fig8():
    v, u, w, z = 0, 1, 2, 3
    dump("fig8.json", [
        ([v], 0), ([u], 0), ([w], 0),
        ([v, u], 1),                      # a
        ([z], 2),
        ([v, z], 3), ([w, z], 3),         # b, c
        ([u, w], 3, 1),                   # d, after b and c
        ([v, w], 4),                      # e
        ([v, u, w], 5), ([v, w, z], 5),   # A, B
    ])


def fig9():
    d = [0, 1, 2]
    a = [3, 4, 5]
    b = [6, 7, 8]
    apex_d, apex_a, apex_b = 9, 10, 11
    triangles = [
        (a[2], d[0], d[2]), (b[2], d[1], d[2]), (a[2], b[2], d[2]), (a[0], a[2], d[0]),
        (b[0], b[1], d[1]), (b[1], b[2], d[1]), (a[0], a[1], d[0]), (a[1], a[2], b[2]),
        (a[1], b[0], b[2]), (a[1], d[0], d[1]), (a[1], b[0], d[1]),
    ]

    def loop(c):
        return [sorted((c[0], c[1])), sorted((c[1], c[2])), sorted((c[0], c[2]))]

    boundary = {}
    for t in triangles:
        for e in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
            e = tuple(sorted(e))
            boundary[e] = boundary.get(e, 0) ^ 1
    rim = {tuple(e) for e in loop(d) + loop(a) + loop(b)}
    assert {e for e, odd in boundary.items() if odd} == rim, "pants boundary is not D + C1 + C2"

    def circle(c, value):
        return [([x], value) for x in c] + [(e, value) for e in loop(c)]

    def cone(apex, c, value):
        out = [([apex], value)]
        out += [([x, apex], value) for x in c]
        out += [(e + [apex], value) for e in loop(c)]
        return out

    interior = sorted(e for e in boundary if e not in rim)
    z = circle(d, 0) + circle(a, 1) + circle(b, 2)
    z += [(list(e), 2) for e in interior] + [(list(t), 2) for t in triangles]
    z += cone(apex_d, d, 3) + cone(apex_a, a, 4) + cone(apex_b, b, 5)
    dump("fig9_z.json", z)
    dump("fig9_x.json", circle(a, 1) + circle(b, 2))
    dump("fig9_y.json", circle(d, 0))


def fig10():
    x = [([i], 0) for i in range(4)] + [([i, i + 1], 1) for i in range(3)]
    z = [([i], 0) for i in range(3)] + [([0, 1], 1), ([1, 2], 1), ([0, 2], 1), ([0, 1, 2], 2)]
    dump("fig10_x.json", x)
    dump("fig10_z.json", z)
    with open(os.path.join(HERE, "fig10_map.json"), "w") as f:
        json.dump({"vertex_map": [0, 1, 2, 0]}, f)
        f.write("\n")


def circle_points(cx, cy, r, n=64):
    return [(cx + r * math.cos(2 * math.pi * i / n), cy + r * math.sin(2 * math.pi * i / n))
            for i in range(n)]


def write_csv(name, pts):
    with open(os.path.join(HERE, name), "w") as f:
        f.write("x,y\n")
        for p in pts:
            f.write("%.17g,%.17g\n" % p)


def fig17():
    # Two well separated sites; X and Y are concentric at each site, Z is
    # Y translated away so nothing of Z encloses anything of Y.
    write_csv("fig17_x.csv", circle_points(0, 0, 0.3) + circle_points(3, 0, 0.5))
    write_csv("fig17_y.csv", circle_points(0, 0, 0.2) + circle_points(3, 0, 0.4))
    write_csv("fig17_z.csv", circle_points(0, 3, 0.2) + circle_points(3, 3, 0.4))


if __name__ == "__main__":
    fig8()
    fig9()
    fig10()
    fig17()
