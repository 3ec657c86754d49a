"""Regenerate the bundled .shift fixtures under src/shiftspace/data."""

from pathlib import Path

from shiftspace.core import golden_mean, save_spec
from shiftspace.robinson import robinson_spec
from shiftspace.times23 import x0_spec

DATA = Path(__file__).resolve().parent.parent / "src" / "shiftspace" / "data"

FIXTURES = {
    "goldenmean.shift": golden_mean,
    "x0.shift": x0_spec,
    "robinson.shift": robinson_spec,
}


def main():
    DATA.mkdir(exist_ok=True)
    for name, make in FIXTURES.items():
        save_spec(make(), DATA / name)
        print(f"wrote {DATA / name}")


if __name__ == "__main__":
    main()
