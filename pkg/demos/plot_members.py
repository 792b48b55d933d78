"""Draw a handful of pencil members into ./plots."""

import os

from wimanedge.plot import PlotSpec, parse_value, render

MEMBERS = [("1", "0"), ("0", "1"), ("1", "1"), ("1", "-3"), ("1", "5*sqrt5"), ("1", "20"), ("1", "sqrtm3")]


def main(out="plots"):
    os.makedirs(out, exist_ok=True)
    for lam, mu in MEMBERS:
        name = f"member_{lam}_{mu}".replace("*", "").replace("/", "_").replace("-", "m")
        spec = PlotSpec(parse_value(lam), parse_value(mu), (-3, 3, -3, 3), 240, os.path.join(out, name + ".svg"))
        res = render(spec)
        print(f"({lam}:{mu}) -> {res.path}  {res.segments}")


if __name__ == "__main__":
    main()
