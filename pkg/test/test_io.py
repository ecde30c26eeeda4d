#
#   Test the text and JSON formats of graphs and complexes
#
import json
import pytest
import flagsphere as fs

PENTAGON = '''\
# the pentagon G_2
graph 5
v 0 a_1
v 1 b_1
v 2 c_2
v 3 b_2
v 4 a_2

e 1 0
e 1 2
e 2 3
e 3 4
e 0 4
'''


def test_parse_graph():
    g = fs.parse_graph(PENTAGON)
    assert g == fs.build_gm(2)
    assert g.labels == ('a_1', 'b_1', 'c_2', 'b_2', 'a_2')


def test_emit_graph_is_canonical():
    text = fs.emit_graph(fs.parse_graph(PENTAGON))
    assert text.splitlines()[0] == 'graph 5'
    assert 'e 0 1' in text.splitlines()
    assert text == fs.canonicalize(PENTAGON)
    assert fs.canonicalize(text) == text


def test_default_labels():
    g = fs.parse_graph('graph 3\ne 0 1\n')
    assert g.labels == ('0', '1', '2')
    assert fs.emit_graph(g) == 'graph 3\ne 0 1\n'


@pytest.mark.parametrize('text, lineno', [
    ('', 1),
    ('grph 3\n', 1),
    ('graph x\n', 1),
    ('graph 2\ne 0 2\n', 2),
    ('graph 2\ne 0 0\n', 2),
    ('graph 2\ne 0 1\ne 1 0\n', 3),
    ('graph 2\n\n# comment\nq 0 1\n', 4),
    ('graph 2\ne 0\n', 2),
])
def test_parse_graph_errors(text, lineno):
    with pytest.raises(fs.ParseError) as err:
        fs.parse_graph(text)
    assert err.value.lineno == lineno
    assert str(err.value).startswith(f'line {lineno}:')


def test_duplicate_labels():
    with pytest.raises(fs.ParseError):
        fs.parse_graph('graph 2\nv 0 x\nv 1 x\n')


def test_graph_json():
    g = fs.build_gm(2)
    text = fs.emit_graph_json(g)
    data = json.loads(text)
    assert data['labels'] == list(g.labels)
    assert data['edges'][0] == [0, 1]
    assert fs.parse_graph_json(text) == g


@pytest.mark.parametrize('text', [
    '[1, 2]',
    '{"labels": "ab"}',
    '{"labels": ["a", "b"], "edges": [[0, 2]]}',
    '{"labels": ["a", "b"], "edges": [[0, 0]]}',
    '{"labels": ["a", "b"], "edges": [[0]]}',
    '{"labels": ["a", "b"], "edges": [[true, 1]]}',
    '{"labels": ["a", "a"]}',
    '{"labels": ',
])
def test_graph_json_errors(text):
    with pytest.raises(fs.ParseError):
        fs.parse_graph_json(text)


def test_parse_complex():
    d = fs.parse_complex('complex 4\nv 0 w\nf 0 1\nf 1 2\nf 2 3\nf 3 0\n')
    assert d == fs.SimplicialComplex([('w', '1'), ('1', '2'), ('2', '3'), ('3', 'w')])
    assert fs.emit_complex(d) == 'complex 4\nv 0 w\nf 0 1\nf 0 3\nf 1 2\nf 2 3\n'


def test_empty_facet():
    d = fs.parse_complex('complex 0\nf\n')
    assert d.is_empty
    assert fs.emit_complex(d) == 'complex 0\nf\n'
    assert fs.parse_complex('complex 0\n').is_void


@pytest.mark.parametrize('text', [
    'complex 2\nf 0 0\n',
    'complex 2\nf 0\n',
    'complex 2\nf 0 5\n',
    'complex 2\ne 0 1\n',
])
def test_parse_complex_errors(text):
    with pytest.raises(fs.ParseError):
        fs.parse_complex(text)


def test_complex_json():
    d = fs.crosspolytope_boundary(2)
    text = fs.emit_complex_json(d)
    assert fs.parse_complex_json(text) == d
    with pytest.raises(fs.ParseError):
        fs.parse_complex_json('{"labels": ["a"], "facets": [[1]]}')
    with pytest.raises(fs.ParseError):
        fs.parse_complex_json('{"labels": ["a"]}')


@pytest.mark.parametrize('fmt', ['text', 'json'])
def test_loads_detects_kind(fmt):
    g = fs.build_r3()
    d = fs.independence_complex(g)
    assert fs.loads(fs.dumps(g, fmt)) == g
    assert fs.loads(fs.dumps(d, fmt)) == d


def test_dumps_errors():
    with pytest.raises(fs.InputError):
        fs.dumps(fs.build_r3(), 'yaml')
    with pytest.raises(fs.InputError):
        fs.dumps(42)


def test_load(tmp_path):
    path = tmp_path / 'g2.txt'
    path.write_text(PENTAGON)
    assert fs.load(path) == fs.build_gm(2)
    with pytest.raises(fs.InputError):
        fs.load(tmp_path / 'missing.txt')


def test_load_invalid_utf8(tmp_path):
    path = tmp_path / 'latin.txt'
    path.write_bytes(b'graph 2\nv 0 \xff\xfe\ne 0 1\n')
    with pytest.raises(fs.ParseError) as err:
        fs.load(path)
    assert err.value.lineno == 2
    assert str(err.value).startswith('line 2:')
