#
# Text and JSON formats for graphs and complexes
#
import json
import logging
from pathlib import Path
from ._complex import SimplicialComplex
from ._errors import InputError, ParseError
from ._graph import Graph

__all__ = [
    'parse_graph',
    'emit_graph',
    'parse_graph_json',
    'emit_graph_json',
    'parse_complex',
    'emit_complex',
    'parse_complex_json',
    'emit_complex_json',
    'canonicalize',
    'loads',
    'read_text',
    'load',
    'dumps',
]

log = logging.getLogger(__name__)


def _lines(text):
    """ Meaningful lines with their 1-based number; blank lines and ``#`` comments are skipped. """
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith('#'):
            yield lineno, line


def _index(token, n, lineno):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f'"{token}" is not a vertex index', lineno) from None
    if not 0 <= value < n:
        raise ParseError(f'Vertex index {value} is outside 0..{n - 1}', lineno)
    return value


def _header(lines, keyword):
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(f'Empty input, expected "{keyword} <n>"', 1) from None
    tokens = line.split()
    if len(tokens) != 2 or tokens[0] != keyword:
        raise ParseError(f'Expected "{keyword} <n>", got "{line}"', lineno)
    try:
        n = int(tokens[1])
    except ValueError:
        raise ParseError(f'Vertex count "{tokens[1]}" is not an integer', lineno) from None
    if n < 0:
        raise ParseError(f'Negative vertex count {n}', lineno)
    return lineno, n


def _vertex_line(line, n, labels, lineno):
    parts = line.split(None, 2)
    if len(parts) != 3:
        raise ParseError(f'Expected "v <index> <label>", got "{line}"', lineno)
    labels[_index(parts[1], n, lineno)] = parts[2]


def _check_labels(labels, lineno):
    if len(set(labels)) != len(labels):
        raise ParseError('Vertex labels should be unique', lineno)


def parse_graph(text):
    """
    Graph from the text format.

    The first line is ``graph <n>``, followed by optional ``v <index> <label>`` lines (the default label is the index)
    and ``e <u> <v>`` lines with 0-based indices.
    Blank lines and lines starting with ``#`` are ignored.

    Raises:
        ParseError: Malformed line, with its line number
    """
    lines = _lines(text)
    header, n = _header(lines, 'graph')
    labels = [str(i) for i in range(n)]
    edges = []
    seen = set()
    for lineno, line in lines:
        kind = line.split(None, 1)[0]
        if kind == 'v':
            _vertex_line(line, n, labels, lineno)
        elif kind == 'e':
            tokens = line.split()
            if len(tokens) != 3:
                raise ParseError(f'Expected "e <u> <v>", got "{line}"', lineno)
            u, v = _index(tokens[1], n, lineno), _index(tokens[2], n, lineno)
            if u == v:
                raise ParseError(f'Self-loop at vertex {u}', lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f'Repeated edge {key[0]} {key[1]}', lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(f'Unknown line type "{kind}"', lineno)

    _check_labels(labels, header)
    return Graph(labels, [(labels[u], labels[v]) for u, v in edges])


def _vertex_lines(labels):
    return [f'v {i} {label}' for i, label in enumerate(labels) if label != str(i)]


def emit_graph(g):
    """ Canonical text of a graph: labels equal to their index are left implicit and edges are sorted. """
    lines = [f'graph {len(g)}', *_vertex_lines(g.labels)]
    lines.extend(f'e {u} {v}' for u, v in sorted(g.index_edges()))
    return '\n'.join(lines) + '\n'


def _json_document(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f'Invalid JSON: {err.msg}', err.lineno) from None
    if not isinstance(data, dict) or 'labels' not in data:
        raise ParseError('Expected a JSON object with a "labels" entry')
    labels = data['labels']
    if not isinstance(labels, list):
        raise ParseError('"labels" should be a list')
    labels = [str(label) for label in labels]
    _check_labels(labels, None)
    return data, labels


def _json_indices(entry, n, what):
    if not isinstance(entry, list) or any(isinstance(i, bool) or not isinstance(i, int) for i in entry):
        raise ParseError(f'{what} should be a list of vertex indices, got {entry!r}')
    for i in entry:
        if not 0 <= i < n:
            raise ParseError(f'Vertex index {i} in {what} is outside 0..{n - 1}')
    return entry


def parse_graph_json(text):
    """ Graph from ``{"labels": [...], "edges": [[u, v], ...]}``. """
    data, labels = _json_document(text)
    edges = []
    for entry in data.get('edges', []):
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f'Edges should be index pairs, got {entry!r}')
        u, v = _json_indices(entry, len(labels), 'edge')
        edges.append((labels[u], labels[v]))
    try:
        return Graph(labels, edges)
    except InputError as err:
        raise ParseError(str(err)) from None


def emit_graph_json(g):
    return json.dumps({'labels': list(g.labels), 'edges': [list(e) for e in sorted(g.index_edges())]}) + '\n'


def parse_complex(text):
    """
    Complex from the facet-list text format.

    The first line is ``complex <n>``, followed by optional ``v <index> <label>`` lines and
    ``f <i1> <i2> ...`` lines listing the vertex indices of a facet; a bare ``f`` is the empty facet.

    Raises:
        ParseError: Malformed line, with its line number
    """
    lines = _lines(text)
    header, n = _header(lines, 'complex')
    labels = [str(i) for i in range(n)]
    facets = []
    for lineno, line in lines:
        tokens = line.split()
        if tokens[0] == 'v':
            _vertex_line(line, n, labels, lineno)
        elif tokens[0] == 'f':
            facet = [_index(t, n, lineno) for t in tokens[1:]]
            if len(set(facet)) != len(facet):
                raise ParseError(f'Facet repeats a vertex: "{line}"', lineno)
            facets.append(facet)
        else:
            raise ParseError(f'Unknown line type "{tokens[0]}"', lineno)

    _check_labels(labels, header)
    try:
        return SimplicialComplex([[labels[i] for i in facet] for facet in facets], vertices=labels)
    except InputError as err:
        raise ParseError(str(err), header) from None


def _facet_indices(d):
    return [[d.index(v) for v in facet] for facet in d.facets]


def emit_complex(d):
    """ Canonical text of a complex: facets are listed by sorted vertex indices, in lexicographic order. """
    lines = [f'complex {len(d.vertices)}', *_vertex_lines(d.vertices)]
    for facet in sorted(sorted(f) for f in _facet_indices(d)):
        lines.append(' '.join(['f', *map(str, facet)]))
    return '\n'.join(lines) + '\n'


def parse_complex_json(text):
    """ Complex from ``{"labels": [...], "facets": [[...], ...]}``. """
    data, labels = _json_document(text)
    facets = data.get('facets')
    if not isinstance(facets, list):
        raise ParseError('Expected a "facets" list')
    facets = [[labels[i] for i in _json_indices(f, len(labels), 'facet')] for f in facets]
    try:
        return SimplicialComplex(facets, vertices=labels)
    except InputError as err:
        raise ParseError(str(err)) from None


def emit_complex_json(d):
    facets = sorted(sorted(f) for f in _facet_indices(d))
    return json.dumps({'labels': list(d.vertices), 'facets': facets}) + '\n'


def loads(text):
    """ Parse a graph or a complex, in text or JSON form, from its content. """
    stripped = text.lstrip()
    if stripped.startswith('{'):
        data, _ = _json_document(text)
        return parse_complex_json(text) if 'facets' in data else parse_graph_json(text)
    first = next((line for _, line in _lines(text)), '')
    if first.startswith('complex'):
        return parse_complex(text)
    return parse_graph(text)


def read_text(path):
    """
    Read a file as UTF-8 text.

    Raises:
        InputError: The file cannot be read
        ParseError: The file is not valid UTF-8, with the line of the first bad byte
    """
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as err:
        raise InputError(f'Cannot read {path}: {err.strerror}') from None
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as err:
        lineno = data.count(b'\n', 0, err.start) + 1
        raise ParseError(f'Invalid UTF-8 byte 0x{data[err.start]:02x} in {path}', lineno) from None


def load(path):
    """ Read a graph or complex file. """
    text = read_text(path)
    log.debug('Loading %s', path)
    return loads(text)


def dumps(obj, fmt='text'):
    """ Serialize a :class:`~flagsphere.Graph` or :class:`~flagsphere.SimplicialComplex` as ``'text'`` or ``'json'``. """
    if fmt not in ('text', 'json'):
        raise InputError(f'Unknown format "{fmt}", expected text or json')
    if isinstance(obj, Graph):
        return emit_graph(obj) if fmt == 'text' else emit_graph_json(obj)
    if isinstance(obj, SimplicialComplex):
        return emit_complex(obj) if fmt == 'text' else emit_complex_json(obj)
    raise InputError(f'Cannot serialize {type(obj).__name__}')


def canonicalize(text):
    """ Canonical form of a graph or complex file, so that ``dumps(loads(x)) == canonicalize(x)``. """
    stripped = text.lstrip()
    return dumps(loads(text), 'json' if stripped.startswith('{') else 'text')
