"""Replay an MMP run file, print the Betti ledger, and optionally the coarse (bound-only) replay."""

import argparse
import json
from pathlib import Path

from chitop.mmp import load_run, replay, run_ledger


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("run", type=Path)
    ap.add_argument("--coarse", action="store_true", help="also replay using only |chi(E) - 1| <= D'(dep)")
    args = ap.parse_args()
    doc = json.loads(args.run.read_text())
    out = run_ledger(doc)
    for i, s in enumerate(out["states"]):
        step = doc["steps"][i - 1]["kind"] if i else "start"
        print(f"{i:>2} {step:<17} b={s['betti']} dep={s['dep']} rho={s['rho']}")
    rep = out["report"]
    print("ok" if rep["ok"] else "violations:")
    for v in rep["violations"]:
        print(f"  [{v['code']}] step {v['index']}: {v['message']}")
    for w in rep["warnings"]:
        print(f"  warning [{w['code']}] state {w['index']}: {w['message']}")
    if args.coarse:
        initial, steps, _ = load_run(doc)
        print("coarse b3:", [s.betti.to_json()[3] for s in replay(initial, steps, coarse=True)])


if __name__ == "__main__":
    main()
