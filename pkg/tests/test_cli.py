import csv
import io
import json
import subprocess
import sys

import pytest

from hypergroups.cli import main, parse_selector, parse_set, UsageError

from _oracles import DATA


def run(capsys, *argv):
    code = main([*argv, '--no-timing'])
    out, err = capsys.readouterr()
    return code, out, err


def test_convolve_examples(capsys):
    code, out, _ = run(capsys, 'convolve', '--hypergroup', 'su2dual', '1', '1')
    assert code == 0 and 'measure: 0: 1/4, 2: 3/4\n' in out
    code, out, _ = run(capsys, 'convolve', '--hypergroup', 'chebyshev:1', '2', '3')
    assert 'measure: 1: 1/2, 5: 1/2\n' in out
    code, out, _ = run(capsys, 'convolve', '--hypergroup', 'su2dual', '0', '7')
    assert 'measure: 7: 1\n' in out


def test_convolve_tuple_elements(capsys):
    code, out, _ = run(capsys, 'convolve', '-H', 'su3dual', '1,0', '(0,1)')
    assert code == 0 and 'measure: (0,0): 1/9, (1,1): 8/9' in out


def test_bad_element_is_usage_error(capsys):
    code, _, err = run(capsys, 'convolve', '-H', 'su2dual', '1', 'x')
    assert code == 2 and 'usage' in err
    code, _, err = run(capsys, 'convolve', '-H', 'su2dual', '1', '-3')
    assert code == 2


def test_unknown_flag_and_selector(capsys):
    assert run(capsys, 'convolve', '-H', 'su2dual', '1', '1', '--bogus')[0] == 2
    assert run(capsys, 'convolve', '-H', 'su4dual', '1', '1')[0] == 2
    assert run(capsys, 'growth', '-H', 'chebyshev:0')[0] == 2
    assert run(capsys, 'frobnicate')[0] == 2


def test_decimal_column_and_digits(capsys):
    code, out, _ = run(capsys, 'convolve', '-H', 'su3dual', '1,0', '0,1', '--digits', '3')
    assert '0.111' in out and '0.889' in out


def test_axioms_su3_ball4(capsys):
    code, out, _ = run(capsys, 'axioms', '-H', 'su3dual', '--ball', '4')
    assert code == 0 and 'result: all pass' in out
    assert 'associativity    pass    3375' in out


def test_axioms_conjugacy_s3(capsys):
    code, out, _ = run(capsys, 'axioms', '-H', f'conjugacy:{DATA / "s3.json"}')
    assert code == 0 and 'all pass' in out


def test_axioms_corrupted_cache_fails_h1(capsys, tmp_path):
    cache = tmp_path / 'c.json'
    assert run(capsys, 'cache', '-H', 'su2dual', 'store', str(cache), '--box', '4')[0] == 0
    doc = json.loads(cache.read_text())
    for x, y, entries in doc['records']:
        if (x, y) == (1, 2):
            entries[0][1:] = [1, 4]            # 1/3 -> 1/4
    cache.write_text(json.dumps(doc))
    code, out, _ = run(capsys, 'axioms', '-H', 'su2dual', '--box', '4', '--cache-file', str(cache))
    assert code == 1
    assert 'H1               FAIL' in out and '(1, 2)' in out


def test_growth_su3(capsys):
    code, out, _ = run(capsys, 'growth', '-H', 'su3dual', '--nmax', '10', '--norm-exp', '8', '--format', 'csv')
    assert code == 0
    rows = [r for r in csv.reader(io.StringIO(out)) if r and not r[0].startswith('#')]
    header, body = rows[0], rows[1:]
    assert header[:3] == ['n', 'size', 'h(F^n)'] and header[-1] == 'closed form'
    assert body[1][2] == '19' and body[2][2] == '155'
    assert all(r[-1] == 'yes' for r in body) and len(body) == 11


def test_leptin_su2(capsys):
    code, out, _ = run(capsys, 'leptin', '-H', 'su2dual', '--K', '1', '--budget', '120', '--D', '1.1')
    assert code == 0
    assert 'best index: 120' in out and '10045/9801' in out and 'certified: yes' in out


def test_leptin_explicit_family(capsys):
    code, out, _ = run(capsys, 'leptin', '-H', 'chebyshev:1', '--K', '1', '--family', '0..3;0..5')
    assert code == 0 and 'best ratio h(K*V)/h(V): 13/11' in out


def test_reiter_chebyshev(capsys):
    code, out, _ = run(capsys, 'reiter', '-H', 'chebyshev:1', '--V', '0..2', '--E', '1', '--r', '2')
    assert code == 0 and 'deficiency^2: 1/5  ~0.2' in out


def test_folner_json_lines(capsys):
    code, out, _ = run(capsys, 'folner', '-H', 'su2dual', '--K', '1', '--V', '0..9', '--format', 'json-lines')
    lines = [json.loads(l) for l in out.splitlines()]
    head = lines[0]
    assert head['hypergroup'] == 'su2dual'
    assert head['strong folner h(K*V ^ V)/h(V)'] == {'exact': '11/35', 'decimal': '0.314286'}
    assert lines[1] == {'x': '1', 'h(x*V ^ V)/h(V)': '11/35', 'h(x*V ^ V)/h(V)~': '0.314286'}


def test_certificate(capsys):
    code, out, _ = run(capsys, 'certificate', '-H', 'su2dual', '--K', '1', '--V', '0..9')
    assert code == 0 and 'bound^2 h(K*V)/h(V): 46/35' in out


def test_levelset(capsys):
    code, out, _ = run(capsys, 'levelset', '-H', 'su2dual', '--M', '100', '--box', '200')
    assert 'count h(x) <= M: 10' in out and 'verdict: saturating' in out
    code, out, _ = run(capsys, 'levelset', '-H', 'chebyshev:1', '--M', '2', '--box', '100')
    assert 'count h(x) <= M: 101' in out and 'verdict: all-below' in out


def test_cache_commands(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv('HYPERGROUPS_CACHE_DIR', str(tmp_path))
    code, out, _ = run(capsys, 'cache', '-H', 'su3dual', 'store', '--ball', '3')
    assert code == 0 and 'hash: ' in out
    files = list(tmp_path.glob('*.json'))
    assert len(files) == 1
    code, out, _ = run(capsys, 'cache', '-H', 'su3dual', 'load')
    assert code == 0 and 'cache: cache ok' in out
    code, out, _ = run(capsys, 'cache', '-H', 'su2dual', 'load', str(files[0]))
    assert code == 1 and 'INVALID' in out
    code, out, _ = run(capsys, 'cache', '-H', 'su2dual', 'load', str(tmp_path / 'none.json'))
    assert code == 1


def test_cache_without_path_or_env(capsys, monkeypatch):
    monkeypatch.delenv('HYPERGROUPS_CACHE_DIR', raising=False)
    assert run(capsys, 'cache', '-H', 'su2dual', 'load')[0] == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / 'o.csv'
    code, out, _ = run(capsys, 'convolve', '-H', 'su2dual', '2', '2', '--format', 'csv', '--output', str(target))
    assert code == 0 and out == ''
    assert '4,5/9,0.555556' in target.read_text()


def test_deterministic_output(capsys):
    argv = ['growth', '-H', 'product:su2dual,chebyshev:1', '--nmax', '4', '--format', 'json-lines']
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv)[1]
    assert a == b


def test_nested_product_selector():
    H = parse_selector('product:su2dual,[product:chebyshev:1,su3dual]')
    assert H.descriptor == 'product(su2dual,product(chebyshev:1,su3dual))'
    with pytest.raises(UsageError):
        parse_selector('product:su2dual,[product:su2dual,[product:su2dual,su2dual]]')
    with pytest.raises(UsageError):
        parse_selector('product:su2dual')


def test_set_syntax():
    su2, su3, c3 = parse_selector('su2dual'), parse_selector('su3dual'), parse_selector('chebyshev:3')
    assert parse_set(su2, '1,3,5') == [1, 3, 5]
    assert parse_set(su2, '0..4') == [0, 1, 2, 3, 4]
    assert parse_set(su2, 'ball:3') == [0, 1, 2, 3]
    assert parse_set(su3, '1,0') == [(1, 0)]
    assert parse_set(su3, '(1,0),(0,1)') == [(0, 1), (1, 0)]
    assert len(parse_set(su3, '0..2')) == 9
    assert parse_set(c3, '1,2,3') == [(1, 2, 3)]
    for bad in ('', '3..1', 'ball:x', '1..', '[1,-2]'):
        with pytest.raises(UsageError):
            parse_set(su2, bad)


def test_threads_flag(capsys):
    code, out, _ = run(capsys, 'axioms', '-H', 'chebyshev:1', '--box', '6', '--threads', '1')
    assert code == 0
    assert run(capsys, 'axioms', '-H', 'chebyshev:1', '--threads', '0')[0] == 2


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, '-m', 'hypergroups.cli', 'convolve', '-H', 'su2dual', '1', '1',
                           '--no-timing'], capture_output=True, text=True)
    assert proc.returncode == 0 and '0: 1/4, 2: 3/4' in proc.stdout
