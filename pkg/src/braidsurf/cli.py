"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource bound exceeded.

``invariant`` and ``states`` take ``--k`` as the index of ``P_k``; ``verify``,
``oracle`` and ``random-check`` take it as the derivative order, so
``verify --k 2`` compares ``P_3`` with ``z^2 P''|_{a=1}``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import checks
from .braid import BraidError, BraidWord, closure_info, parse, random_word
from .diagram import enumerate_colorings, enumerate_star_colorings, gauss_from_braid
from .errors import ResourceLimitError
from .invariant import DEFAULT_MAX_ARROWS, P, P_star, invariant_report
from .oracle import DEFAULT_MAX_LETTERS, homfly, script_p
from .surface import arrows_of, color_respected, is_ascending, is_descending, trace_boundary

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    braid: str = ""
    strands: Optional[int] = None
    k: Optional[int] = None
    j: Optional[int] = None
    max_arrows: int = DEFAULT_MAX_ARROWS
    max_letters: int = DEFAULT_MAX_LETTERS
    samples: int = 50
    letters: int = 7
    max_k: int = 2
    seed: int = 0
    json: bool = False
    workers: int = 1
    ascending: bool = False


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _word(cfg: RunConfig) -> BraidWord:
    return parse(cfg.braid, cfg.strands)


def _check_arrows(w: BraidWord, cfg: RunConfig) -> None:
    if len(w) > cfg.max_arrows:
        raise ResourceLimitError(f"{len(w)} letters exceeds --max-arrows {cfg.max_arrows}")


def _header(w: BraidWord) -> str:
    info = closure_info(w)
    return (
        f"braid [{w}] on {w.strands} strands: {len(w)} arrows, "
        f"{info.r} component(s), writhe {info.writhe}"
    )


def cmd_invariant(cfg: RunConfig) -> int:
    w = _word(cfg)
    _check_arrows(w, cfg)
    k = 1 if cfg.k is None else cfg.k
    if k < 1:
        raise BraidError("invariant --k is the index of P_k and must be >= 1")
    G = gauss_from_braid(w)
    rep = invariant_report(G, k, workers=cfg.workers, max_arrows=cfg.max_arrows)
    if cfg.json:
        out = rep.to_json()
        out["braid"] = {"strands": w.strands, "letters": list(w.letters)}
        print(_dump(out))
        return EXIT_OK
    print(_header(w))
    print("f: " + "  ".join(f"f_{j}^({k})={v}" for j, v in rep.f.items()))
    cols = [f"D_n,{k},{j}" for j in rep.D] + [f"D_n,{k}"]
    width = max(len(c) for c in cols) + 2
    print("n".rjust(3) + "".join(c.rjust(width) for c in cols))
    for n in range(rep.n_max + 1):
        row = [rep.D[j][n] for j in rep.D] + [rep.D_total[n]]
        print(str(n).rjust(3) + "".join(str(v).rjust(width) for v in row))
    print(f"P_{k} = {rep.P}")
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    w = _word(cfg)
    if cfg.k is None:
        poly = homfly(w, max_letters=cfg.max_letters)
        label = "P"
    else:
        poly = script_p(w, cfg.k, max_letters=cfg.max_letters)
        label = f"scriptP_{cfg.k}"
    if cfg.json:
        print(_dump({"braid": {"strands": w.strands, "letters": list(w.letters)},
                     "quantity": label, "k": cfg.k, "poly": poly.to_json(), "text": str(poly)}))
    else:
        print(_header(w))
        print(f"{label} = {poly}")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    w = _word(cfg)
    _check_arrows(w, cfg)
    k = 0 if cfg.k is None else cfg.k
    if k < 0:
        raise BraidError("verify --k is a derivative order and must be >= 0")
    G = gauss_from_braid(w)
    p = P(k + 1, G, workers=cfg.workers, max_arrows=cfg.max_arrows)
    ps = P_star(k + 1, G, workers=cfg.workers, max_arrows=cfg.max_arrows)
    sp = script_p(w, k, max_letters=cfg.max_letters)
    ok = p == ps == sp
    if cfg.json:
        print(_dump({"braid": {"strands": w.strands, "letters": list(w.letters)}, "k": k,
                     "P": p.to_json(), "P_star": ps.to_json(), "oracle": sp.to_json(),
                     "pass": ok}))
    else:
        print(_header(w))
        print(f"P_{k + 1}     = {p}")
        print(f"P*_{k + 1}    = {ps}")
        print(f"scriptP_{k} = {sp}")
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def _state_records(w: BraidWord, j: int, star: bool) -> List[dict]:
    G = gauss_from_braid(w)
    colorings = enumerate_star_colorings(G, j) if star else enumerate_colorings(G, j)
    test = is_ascending if star else is_descending
    out = []
    for col in colorings:
        states = []
        for S in range(1 << G.n_arrows):
            verdict = test(G, S, col)
            if not verdict or not color_respected(G, S, col):
                continue
            prof = trace_boundary(G, S)
            arrows = arrows_of(S)
            sign = 1
            for a in arrows:
                sign *= G.signs[a]
            states.append({
                "arrows": list(arrows),
                "signs": [G.signs[a] for a in arrows],
                "sign": sign,
                "b": prof.boundary_count,
                "genus": list(prof.genus_profile),
                "separating": sorted(prof.separating),
                "certificate": [[a, "tail->head" if al else "head->tail"] for a, al in verdict.certificate],
            })
        out.append({"j": j, "coloring": col.to_json(), "states": states})
    return out


def cmd_states(cfg: RunConfig) -> int:
    w = _word(cfg)
    _check_arrows(w, cfg)
    k = 1 if cfg.k is None else cfg.k
    if k < 1:
        raise BraidError("states --k is the index of P_k and must be >= 1")
    js = [cfg.j] if cfg.j is not None else list(range(1, k + 1))
    records = []
    for j in js:
        if j < 1:
            raise BraidError("--j must be >= 1")
        records.extend(_state_records(w, j, cfg.ascending))
    notes = [f"no colorings with {j} base points on {w.strands} strands" for j in js if j > w.strands]
    flavor = "ascending" if cfg.ascending else "descending"
    if cfg.json:
        print(_dump({"diagram": gauss_from_braid(w).to_json(), "flavor": flavor,
                     "colorings": records, "notes": notes}))
        return EXIT_OK
    print(_header(w))
    for note in notes:
        print(f"note: {note}")
    for rec in records:
        col = rec["coloring"]
        print(f"j={rec['j']} based={col['based']} colors={col['colors']}: {len(rec['states'])} {flavor} state(s)")
        for st in rec["states"]:
            arrows = "{" + ",".join(map(str, st["arrows"])) + "}"
            print(f"  S={arrows} sign={st['sign']:+d} b={st['b']} genus={st['genus']} "
                  f"separating={st['separating']}")
    return EXIT_OK


@dataclass(frozen=True)
class _Sample:
    index: int
    word: BraidWord
    triple_index: Optional[int]
    conjugator: BraidWord
    stab_sign: int


def _draw_samples(cfg: RunConfig) -> List[_Sample]:
    rng = random.Random(cfg.seed)
    out = []
    top = max(1, cfg.strands if cfg.strands is not None else 3)
    for i in range(cfg.samples):
        m = rng.randint(2, top) if top >= 2 else 1
        w = random_word(rng, m, rng.randint(0, cfg.letters))
        tri = rng.randrange(len(w)) if len(w) else None
        g = random_word(rng, m, rng.randint(1, 2))
        out.append(_Sample(i, w, tri, g, rng.choice((1, -1))))
    return out


def _run_sample(args) -> List[str]:
    s, max_k = args
    bad = []
    for k in range(max_k + 1):
        bad += checks.main_theorem(s.word, k)
    if s.triple_index is not None:
        nmax = len(s.word) + max_k
        bad += checks.skein_D(s.word, s.triple_index, max_k + 1, nmax)
        bad += checks.skein_P(s.word, s.triple_index, max_k)
    bad += checks.markov(s.word, s.conjugator, s.stab_sign, max_k + 1)
    return bad


def cmd_random_check(cfg: RunConfig) -> int:
    samples = _draw_samples(cfg)
    jobs = [(s, cfg.max_k) for s in samples]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as ex:
            results = list(ex.map(_run_sample, jobs))
    else:
        results = [_run_sample(j) for j in jobs]
    failures = 0
    lines = []
    for s, bad in zip(samples, results):
        status = "ok" if not bad else "FAIL"
        lines.append(f"sample {s.index}: {status} strands={s.word.strands} braid=[{s.word}]")
        for msg in bad:
            lines.append(f"  {msg} (seed {cfg.seed}, sample {s.index})")
        failures += bool(bad)
    if cfg.json:
        print(_dump({"seed": cfg.seed, "samples": [
            {"index": s.index, "strands": s.word.strands, "letters": list(s.word.letters),
             "failures": bad} for s, bad in zip(samples, results)],
            "pass": failures == 0}))
    else:
        print("\n".join(lines))
        print(f"{'PASS' if not failures else 'FAIL'}: {len(samples) - failures}/{len(samples)} samples clean")
    return EXIT_OK if not failures else EXIT_FAIL


COMMANDS = {
    "invariant": cmd_invariant,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "states": cmd_states,
    "random-check": cmd_random_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--braid", default="", help='signed generator indices, e.g. "1 1 1"')
    common.add_argument("--strands", type=int, default=None)
    common.add_argument("--k", type=int, default=None)
    common.add_argument("--json", action="store_true")
    common.add_argument("--max-arrows", type=int, default=DEFAULT_MAX_ARROWS)
    common.add_argument("--max-letters", type=int, default=DEFAULT_MAX_LETTERS,
                        help="letter bound for the skein oracle")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="braidsurf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("invariant", parents=[common], help="compute P_k by state counting")
    sub.add_parser("oracle", parents=[common], help="HOMFLY-PT by skein recursion")
    sub.add_parser("verify", parents=[common], help="compare P_{k+1}, P*_{k+1} and the oracle")
    st = sub.add_parser("states", parents=[common], help="list colorings and accepted states")
    st.add_argument("--j", type=int, default=None, help="number of base points")
    st.add_argument("--ascending", action="store_true", help="star colorings, ascending states")
    rc = sub.add_parser("random-check", parents=[common], help="randomized identity campaign")
    rc.add_argument("--samples", type=int, default=50)
    rc.add_argument("--letters", type=int, default=7)
    rc.add_argument("--max-k", type=int, default=2)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    try:
        return COMMANDS[cfg.command](cfg)
    except (BraidError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
