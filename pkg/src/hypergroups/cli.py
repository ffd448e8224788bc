"""Command-line front end.

    hypergroups convolve --hypergroup su2dual 1 1
    hypergroups axioms --hypergroup su3dual --ball 4
    hypergroups growth --hypergroup su3dual --nmax 10 --norm-exp 8
    hypergroups reiter --hypergroup chebyshev:1 --V 0..2 --E 1 --r 2

Selectors: ``su2dual``, ``su3dual``, ``chebyshev:<d>``, ``conjugacy:<spec.json>``,
``product:<sel>,<sel>[,...]`` (a factor that is itself a product goes in
brackets: ``product:su2dual,[product:chebyshev:1,chebyshev:1]``).

Elements are Python literals (``3``, ``1,0``, ``(1,0)``).  Sets are comma
lists (``1,3,5``; ``[(1,0),(0,1)]``), ranges ``a..b`` (coordinatewise boxes
for tuple elements), ``ball:n`` over the default generators, or ``all``.

Exit codes: 0 success, 1 property or validation failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import ast
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction
from itertools import product as cartesian
from pathlib import Path

from . import __version__
from .amenability import (CertificateError, ParameterError, bai_certificate, check_f_implies_sf,
                          folner_ratio, folner_to_reiter, haar_level_set, leptin_ratio,
                          leptin_search, reiter_deficiency, strong_folner_ratio)
from .axioms import verify_axioms
from .catalog import (CacheError, GroupSpecError, build_chebyshev, build_conjugacy, build_product,
                      build_su2_dual, build_su3_dual, cache_load, cache_store, generate_group,
                      load_group_spec)
from .core import DomainError, Hypergroup, HypergroupError, convolve_points
from .growth import Balls, growth_series, su3_ball_closed_form

CACHE_ENV = 'HYPERGROUPS_CACHE_DIR'

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- selectors, elements, sets -------------------------------------------------

def _split_top(s: str) -> list[str]:
    parts, depth, cur = [], 0, ''
    for ch in s:
        if ch == '[':
            depth += 1
        elif ch == ']':
            depth -= 1
            if depth < 0:
                raise UsageError(f'unbalanced brackets in {s!r}')
        if ch == ',' and depth == 0:
            parts.append(cur)
            cur = ''
        else:
            cur += ch
    if depth:
        raise UsageError(f'unbalanced brackets in {s!r}')
    parts.append(cur)
    return parts


def parse_selector(text: str, _depth: int = 0) -> Hypergroup:
    text = text.strip()
    if text.startswith('[') and text.endswith(']'):
        text = text[1:-1].strip()
    if text == 'su2dual':
        return build_su2_dual()
    if text == 'su3dual':
        return build_su3_dual()
    if text.startswith('chebyshev:'):
        try:
            d = int(text.split(':', 1)[1])
        except ValueError:
            raise UsageError(f'bad Chebyshev dimension in {text!r}') from None
        if d < 1:
            raise UsageError('Chebyshev dimension must be >= 1')
        return build_chebyshev(d)
    if text.startswith('conjugacy:'):
        path = text.split(':', 1)[1]
        try:
            spec = load_group_spec(path)
        except FileNotFoundError:
            raise UsageError(f'group spec not found: {path}') from None
        return build_conjugacy(generate_group(spec))
    if text.startswith('product:'):
        if _depth > 1:
            raise UsageError('products nest at most one level deep')
        parts = _split_top(text.split(':', 1)[1])
        if len(parts) < 2 or not all(p.strip() for p in parts):
            raise UsageError(f'a product needs at least two factors: {text!r}')
        return build_product([parse_selector(p, _depth + 1) for p in parts])
    raise UsageError(f'unknown hypergroup selector {text!r}')


def _literal(text: str):
    try:
        return ast.literal_eval(text.strip())
    except (ValueError, SyntaxError):
        raise UsageError(f'cannot parse {text!r}') from None


def _as_element(H: Hypergroup, v):
    if isinstance(v, list):
        v = tuple(v)
    if isinstance(v, tuple):
        v = tuple(_as_element_loose(c) for c in v)
    if not H.contains(v):
        raise UsageError(f'{v!r} is not an element of {H.descriptor}')
    return v


def _as_element_loose(v):
    if isinstance(v, (list, tuple)):
        return tuple(_as_element_loose(c) for c in v)
    return v


def parse_element(H: Hypergroup, text: str):
    return _as_element(H, _literal(text))


def parse_set(H: Hypergroup, text: str, generators=None) -> list:
    """Elements named by a set spec, deduplicated, in canonical order."""
    text = text.strip()
    if not text:
        raise UsageError('empty set spec')
    if text == 'all':
        try:
            out = H.default_truncation()
        except NotImplementedError:
            raise UsageError(f'{H.descriptor} has no default truncation') from None
    elif text.startswith('ball:'):
        try:
            n = int(text[5:])
        except ValueError:
            raise UsageError(f'bad ball radius in {text!r}') from None
        if n < 0:
            raise UsageError('ball radius must be >= 0')
        out = Balls(H, generators or H.default_generators()).ball(n)
    elif '..' in text and not any(c in text for c in '()[],'):
        lo, _, hi = text.partition('..')
        try:
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise UsageError(f'bad range {text!r}') from None
        if lo > hi:
            raise UsageError(f'empty range {text!r}')
        out = _range_set(H, lo, hi)
    else:
        v = _literal(text)
        if isinstance(v, tuple) and H.contains(_as_element_loose(v)):
            out = [_as_element_loose(v)]
        elif isinstance(v, (list, tuple, set)):
            out = [_as_element(H, c) for c in v]
        else:
            out = [_as_element(H, v)]
    return sorted(set(out), key=H.order_key)


def _range_set(H: Hypergroup, lo: int, hi: int) -> list:
    if H.contains(lo):
        return list(range(lo, hi + 1))
    e = H.identity
    if isinstance(e, tuple) and all(isinstance(c, int) for c in e):
        cand = list(cartesian(range(lo, hi + 1), repeat=len(e)))
        return [x for x in cand if H.contains(x)]
    raise UsageError(f'ranges are not supported for {H.descriptor}')


def parse_truncation(H: Hypergroup, args) -> list:
    if args.ball is not None:
        return parse_set(H, f'ball:{args.ball}')
    if args.box is not None:
        return parse_set(H, f'0..{args.box}')
    if args.set is not None:
        return parse_set(H, args.set)
    return parse_set(H, 'all')


# -- output --------------------------------------------------------------------

def fmt_exact(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f'{v.numerator}/{v.denominator}'
    return str(v)


def fmt_decimal(v, digits: int) -> str:
    return format(float(v), f'.{digits}g')


def fmt_element(x) -> str:
    if isinstance(x, tuple):
        return '(' + ','.join(fmt_element(c) for c in x) + ')'
    return str(x)


def fmt_set(xs) -> str:
    return '{' + ', '.join(fmt_element(x) for x in xs) + '}'


class Output:
    """One command's OutputRecord: echo, descriptor, summary lines and a table."""

    def __init__(self, args, H: Hypergroup | None):
        self.args = args
        self.H = H
        self.summary: list[tuple[str, object]] = []
        self.columns: list[str] = []
        self.rows: list[list] = []
        self.t0 = time.perf_counter()

    def note(self, key, value):
        self.summary.append((key, value))

    def exact(self, key, value: Fraction):
        """Summary entry with exact and decimal forms."""
        self.summary.append((key, value))

    def table(self, columns, rows):
        self.columns = list(columns)
        self.rows = [list(r) for r in rows]

    def _cell(self, v):
        return fmt_element(v) if isinstance(v, tuple) else fmt_exact(v)

    def _expand(self):
        """Fraction columns get a parallel decimal column."""
        digits = self.args.digits
        frac_cols = {i for i in range(len(self.columns))
                     if any(isinstance(r[i], Fraction) for r in self.rows)}
        cols = []
        for i, c in enumerate(self.columns):
            cols.append(c)
            if i in frac_cols:
                cols.append(c + '~')
        rows = []
        for r in self.rows:
            out = []
            for i, v in enumerate(r):
                out.append(self._cell(v))
                if i in frac_cols:
                    out.append(fmt_decimal(v, digits))
            rows.append(out)
        return cols, rows

    def render(self) -> str:
        fmt = self.args.format
        digits = self.args.digits
        echo = ' '.join(self.args.argv)
        desc = self.H.descriptor if self.H is not None else '-'
        elapsed = time.perf_counter() - self.t0
        cols, rows = self._expand()
        buf = io.StringIO()
        if fmt == 'json-lines':
            head = {'command': echo, 'hypergroup': desc}
            for k, v in self.summary:
                head[k] = _json_value(v, digits)
            buf.write(json.dumps(head) + '\n')
            for r in rows:
                buf.write(json.dumps(dict(zip(cols, r))) + '\n')
            if not self.args.no_timing:
                buf.write(json.dumps({'elapsed_s': round(elapsed, 6)}) + '\n')
        elif fmt == 'csv':
            w = csv.writer(buf, lineterminator='\n')
            w.writerow(['# command', echo])
            w.writerow(['# hypergroup', desc])
            for k, v in self.summary:
                w.writerow(['# ' + k] + _summary_cells(v, digits))
            if cols:
                w.writerow(cols)
                w.writerows(rows)
            if not self.args.no_timing:
                w.writerow(['# elapsed_s', f'{elapsed:.3f}'])
        else:
            buf.write(f'# {echo}\n# hypergroup: {desc}\n')
            for k, v in self.summary:
                buf.write(f'{k}: ' + '  ~'.join(_summary_cells(v, digits)) + '\n')
            if cols:
                widths = [max(len(c), *(len(r[i]) for r in rows)) if rows else len(c)
                          for i, c in enumerate(cols)]
                buf.write('  '.join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + '\n')
                for r in rows:
                    buf.write('  '.join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + '\n')
            if not self.args.no_timing:
                buf.write(f'# elapsed: {elapsed:.3f}s\n')
        return buf.getvalue()


def _summary_cells(v, digits) -> list[str]:
    if isinstance(v, Fraction):
        return [fmt_exact(v), fmt_decimal(v, digits)]
    if isinstance(v, float):
        return [fmt_decimal(v, digits)]
    if isinstance(v, tuple):
        return [fmt_element(v)]
    return [str(v)]


def _json_value(v, digits):
    if isinstance(v, Fraction):
        return {'exact': fmt_exact(v), 'decimal': fmt_decimal(v, digits)}
    if isinstance(v, float):
        return fmt_decimal(v, digits)
    if isinstance(v, tuple):
        return fmt_element(v)
    return v


def format_measure(m) -> str:
    return ', '.join(f'{fmt_element(z)}: {fmt_exact(v)}' for z, v in m.sorted_items())


# -- commands ------------------------------------------------------------------

def cmd_convolve(H, args, out: Output) -> int:
    x = parse_element(H, args.x)
    y = parse_element(H, args.y)
    m = convolve_points(H, x, y)
    out.note('measure', format_measure(m))
    out.table(['element', 'mass'], [[z, v] for z, v in m.sorted_items()])
    return EXIT_OK


def cmd_axioms(H, args, out: Output) -> int:
    T = parse_truncation(H, args)
    if H.identity not in T:
        T = sorted(set(T) | {H.identity}, key=H.order_key)
    rep = verify_axioms(H, T, random_functions=args.random_functions, seed=args.seed)
    out.note('truncation size', len(T))
    out.table(['axiom', 'status', 'checked', 'witness'],
              [[r.name, 'pass' if r.passed else 'FAIL', r.checked,
                '' if r.witness is None else repr(r.witness)] for r in rep.results.values()])
    for r in rep.failures():
        out.note(f'{r.name} failure', r.detail)
    out.note('result', 'all pass' if rep.ok else f'{len(rep.failures())} failing')
    return EXIT_OK if rep.ok else EXIT_FAIL


def _generators(H, args):
    if args.generator is None:
        return H.default_generators()
    return parse_set(H, args.generator)


def cmd_growth(H, args, out: Output) -> int:
    F = _generators(H, args)
    rep = growth_series(H, F, args.nmax, args.norm_exp)
    closed = H.descriptor == 'su3dual' and set(F) == {(1, 0), (0, 1)}
    cols = ['n', 'size', 'h(F^n)', f'h(F^n)/n^{args.norm_exp}']
    rows = []
    bad = 0
    for r in rep.rows:
        norm = r.mass if r.n == 0 else r.mass / Fraction(r.n) ** args.norm_exp
        row = [r.n, r.size, r.mass, norm]
        if closed:
            cf = su3_ball_closed_form(r.n)
            row.append('yes' if cf == r.mass else 'NO')
            bad += cf != r.mass
        rows.append(row)
    if closed:
        cols.append('closed form')
    out.note('generators', fmt_set(F))
    out.table(cols, rows)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_leptin(H, args, out: Output) -> int:
    K = parse_set(H, args.K)
    gens = parse_set(H, args.generator) if args.generator else None
    if args.family == 'balls':
        res = leptin_search(H, K, budget=args.budget, D=args.D, generators=gens)
    else:
        # explicit candidates separated by ';'
        fam = [parse_set(H, s) for s in args.family.split(';') if s.strip()]
        res = leptin_search(H, K, family=fam, budget=args.budget, D=args.D)
    out.note('K', fmt_set(K))
    out.note('candidates tried', res.tried)
    out.note('best index', res.index)
    out.note('best |V|', len(res.V))
    out.exact('best ratio h(K*V)/h(V)', res.ratio)
    if res.D is not None:
        out.exact('D', res.D)
        out.note('certified', 'yes' if res.certified else 'no')
        return EXIT_OK if res.certified else EXIT_FAIL
    return EXIT_OK


def cmd_folner(H, args, out: Output) -> int:
    K = parse_set(H, args.K)
    V = parse_set(H, args.V)
    rows = [[x, folner_ratio(H, x, V).value] for x in K]
    out.note('|V|', len(V))
    out.table(['x', 'h(x*V ^ V)/h(V)'], rows)
    lep = leptin_ratio(H, K, V).value
    sf = strong_folner_ratio(H, K, V).value
    _, total = check_f_implies_sf(H, K, V)
    out.exact('leptin h(K*V)/h(V)', lep)
    out.exact('strong folner h(K*V ^ V)/h(V)', sf)
    out.exact('sum of pointwise folner', total)
    ok = lep - 1 <= sf <= total
    out.note('chain leptin-1 <= strong <= sum', 'holds' if ok else 'VIOLATED')
    return EXIT_OK if ok else EXIT_FAIL


def cmd_reiter(H, args, out: Output) -> int:
    V = parse_set(H, args.V)
    E = parse_set(H, args.E)
    f = folner_to_reiter(H, V, args.r)
    rep = reiter_deficiency(H, f, E, args.r)
    out.note('r', args.r)
    out.note('|V|', len(V))
    out.table(['x', f'||L_x f - f||^{args.r}'], [[x, rep.per_element[x]] for x in E])
    out.exact(f'deficiency^{args.r}', rep.deficiency_pow)
    out.note('deficiency', rep.deficiency)
    return EXIT_OK


def cmd_certificate(H, args, out: Output) -> int:
    K = parse_set(H, args.K)
    V = parse_set(H, args.V)
    try:
        cert = bai_certificate(H, K, V)
    except CertificateError as exc:
        out.note('certificate', f'INVALID: {exc}')
        return EXIT_FAIL
    out.note('certificate', 'valid (u >= 0, u = 1 on K, supp u in K*V*V~)')
    out.exact('bound^2 h(K*V)/h(V)', cert.bound_sq)
    out.note('bound', cert.bound)
    out.table(['x', 'u(x)'], [[x, v] for x, v in cert.u.sorted_items()])
    return EXIT_OK


def cmd_levelset(H, args, out: Output) -> int:
    T = parse_truncation(H, args)
    rep = haar_level_set(H, Fraction(args.M), T)
    out.exact('M', rep.M)
    out.note('truncation size', rep.size)
    out.note('count h(x) <= M', rep.count)
    out.exact('max h on truncation', rep.max_haar)
    out.note('verdict', rep.verdict)
    out.table(['prefix size', 'count'], rep.counts)
    return EXIT_OK


def cmd_cache(H, args, out: Output) -> int:
    path = Path(args.path) if args.path else _default_cache_path(H)
    if path is None:
        raise UsageError(f'no cache path given and {CACHE_ENV} is unset')
    if args.action == 'store':
        T = parse_truncation(H, args)
        for i, x in enumerate(T):
            for y in T[i:]:
                H.convolve(x, y)
        path.parent.mkdir(parents=True, exist_ok=True)
        digest = cache_store(H, path)
        out.note('written', str(path))
        out.note('records', len(H.cache_items()))
        out.note('hash', digest)
        return EXIT_OK
    try:
        cache = cache_load(path, H)
    except FileNotFoundError:
        out.note('cache', f'INVALID: no such file {path}')
        return EXIT_FAIL
    except CacheError as exc:
        out.note('cache', f'INVALID: {exc}')
        return EXIT_FAIL
    out.note('records', len(cache.records))
    out.note('hash', cache.hash)
    out.note('cache', 'cache ok')
    return EXIT_OK


def _default_cache_path(H) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f'{H.descriptor_hash}.json'


COMMANDS = {
    'convolve': cmd_convolve, 'axioms': cmd_axioms, 'growth': cmd_growth,
    'leptin': cmd_leptin, 'folner': cmd_folner, 'reiter': cmd_reiter,
    'certificate': cmd_certificate, 'levelset': cmd_levelset, 'cache': cmd_cache,
}


# -- argument parsing ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--hypergroup', '-H', required=True, metavar='SEL',
                        help='su2dual | su3dual | chebyshev:<d> | conjugacy:<path> | product:<sel>,<sel>')
    common.add_argument('--format', choices=('table', 'csv', 'json-lines'), default='table')
    common.add_argument('--digits', type=int, default=6, help='significant digits of decimals')
    common.add_argument('--output', '-o', metavar='PATH', help='write output here instead of stdout')
    common.add_argument('--no-timing', action='store_true', help='omit elapsed time')
    common.add_argument('--threads', type=int, help='worker threads for batch kernels')
    common.add_argument('--cache-file', metavar='PATH',
                        help='install structure constants from a cache file first')

    trunc = argparse.ArgumentParser(add_help=False)
    g = trunc.add_mutually_exclusive_group()
    g.add_argument('--ball', type=int, metavar='N', help='ball of radius N over the default generators')
    g.add_argument('--box', type=int, metavar='N', help='range 0..N (coordinatewise)')
    g.add_argument('--set', metavar='SET', help='explicit set spec')

    p = argparse.ArgumentParser(prog='hypergroups', description=__doc__.split('\n')[0])
    p.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = p.add_subparsers(dest='command', required=True)

    s = sub.add_parser('convolve', parents=[common], help='point convolution delta_x * delta_y')
    s.add_argument('x')
    s.add_argument('y')

    s = sub.add_parser('axioms', parents=[common, trunc], help='verify the axioms on a truncation')
    s.add_argument('--random-functions', type=int, default=5)
    s.add_argument('--seed', type=int, default=0)

    s = sub.add_parser('growth', parents=[common], help='Haar mass of generator balls')
    s.add_argument('--generator', metavar='SET')
    s.add_argument('--nmax', type=int, default=10)
    s.add_argument('--norm-exp', type=int, default=0)

    s = sub.add_parser('leptin', parents=[common], help='search for a small Leptin ratio')
    s.add_argument('--K', required=True, metavar='SET')
    s.add_argument('--family', default='balls', help="'balls' or candidate sets separated by ';'")
    s.add_argument('--generator', metavar='SET', help='ball generators (default: K and its involutes)')
    s.add_argument('--budget', type=int, default=50)
    s.add_argument('--D', type=Fraction, help='certify ratio < D')

    s = sub.add_parser('folner', parents=[common], help='Folner, strong Folner and Leptin ratios')
    s.add_argument('--K', required=True, metavar='SET')
    s.add_argument('--V', required=True, metavar='SET')

    s = sub.add_parser('reiter', parents=[common], help='Reiter deficiency of a normalised indicator')
    s.add_argument('--V', required=True, metavar='SET')
    s.add_argument('--E', required=True, metavar='SET')
    s.add_argument('--r', type=int, choices=(1, 2), default=1)

    s = sub.add_parser('certificate', parents=[common], help='approximate-identity certificate')
    s.add_argument('--K', required=True, metavar='SET')
    s.add_argument('--V', required=True, metavar='SET')

    s = sub.add_parser('levelset', parents=[common, trunc], help='Haar level-set diagnostic')
    s.add_argument('--M', required=True, type=Fraction)

    s = sub.add_parser('cache', parents=[common, trunc], help='store or validate structure caches')
    s.add_argument('action', choices=('store', 'load'))
    s.add_argument('path', nargs='?', help=f'cache file (default: ${CACHE_ENV}/<hash>.json)')
    return p


def _set_threads(n):
    if n is None:
        return
    if n < 1:
        raise UsageError('--threads must be >= 1')
    import numba
    numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.argv = argv
    if args.digits < 1:
        parser.print_usage(sys.stderr)
        print('hypergroups: error: --digits must be >= 1', file=sys.stderr)
        return EXIT_USAGE
    try:
        _set_threads(args.threads)
        H = parse_selector(args.hypergroup)
        out = Output(args, H)
        if args.cache_file:
            cache_load(args.cache_file, H).install(H)
        code = COMMANDS[args.command](H, args, out)
    except (UsageError, DomainError, ParameterError) as exc:
        parser.print_usage(sys.stderr)
        print(f'hypergroups {args.command}: error: {exc}', file=sys.stderr)
        return EXIT_USAGE
    except (GroupSpecError, CacheError, HypergroupError) as exc:
        print(f'hypergroups {args.command}: {exc}', file=sys.stderr)
        return EXIT_FAIL
    text = out.render()
    if args.output:
        Path(args.output).write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)
    return code


if __name__ == '__main__':
    sys.exit(main())
