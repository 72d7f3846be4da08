#!/usr/bin/env python3
"""Print download locations for the benchmark networks and check local copies.

The tool itself never fetches anything: runs stay reproducible and testable
offline. Grab the files from the URLs below (the classic Pajek dataset
collection and its mirrors), drop them into data/, then rerun this script to
confirm the node/edge counts match the published figures.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tricent import load_graph  # noqa: E402

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

DATASETS = {
    "karate.net": {
        "nodes": 34,
        "edges": 78,
        "urls": [
            "http://vlado.fmf.uni-lj.si/pub/networks/data/ucinet/zachary.net",
            "https://websites.umich.edu/~mejn/netdata/karate.zip",
        ],
    },
    "dolphins.net": {
        "nodes": 62,
        "edges": 159,
        "urls": [
            "https://websites.umich.edu/~mejn/netdata/dolphins.zip",
            "http://vlado.fmf.uni-lj.si/pub/networks/data/",
        ],
    },
    "blogs.net": {
        "nodes": 1224,
        "edges": 16715,
        "urls": [
            "https://websites.umich.edu/~mejn/netdata/polblogs.zip",
            "http://vlado.fmf.uni-lj.si/pub/networks/data/",
        ],
    },
    "USAir97.net": {
        "nodes": 332,
        "edges": 2126,
        "urls": [
            "http://vlado.fmf.uni-lj.si/pub/networks/data/mix/USAir97.net",
            "https://networkrepository.com/USAir97.php",
        ],
    },
}


def main() -> int:
    status = 0
    for name, meta in DATASETS.items():
        path = DATA_DIR / name
        print(f"{name}: expected {meta['nodes']} nodes / {meta['edges']} edges")
        for url in meta["urls"]:
            print(f"  source: {url}")
        if not path.exists():
            print("  local copy: MISSING (place the file in data/)")
            continue
        try:
            g = load_graph(path)
        except Exception as exc:
            print(f"  local copy: UNREADABLE ({exc})")
            status = 1
            continue
        ok = g.node_count == meta["nodes"] and g.edge_count == meta["edges"]
        verdict = "OK" if ok else "VARIANT (counts differ; experiments will log this)"
        print(f"  local copy: {g.node_count} nodes / {g.edge_count} edges -> {verdict}")
    return status


if __name__ == "__main__":
    sys.exit(main())
