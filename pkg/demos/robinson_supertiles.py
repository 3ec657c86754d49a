"""Print the order-2 south-west supertile and its corner structure."""

import sys

from shiftspace.robinson import check_local_rules, locate_structure, render_ascii, supertile

order = int(sys.argv[1]) if len(sys.argv) > 1 else 2
patch = supertile("sw", order)
print(render_ascii(patch), end="")
print(f"violations: {len(check_local_rules(patch))}")
for line in locate_structure(patch).lines():
    if not line.startswith("blue"):
        print(line)
