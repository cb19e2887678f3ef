"""Readers and writers for the line-oriented text formats.

Every format ignores blank lines and lines starting with "#". Vertex lists are
comma-separated ids; an empty list is written as nothing.
"""

from os import path
import re

from tanglekit.core import (
    errors,
    graph,
    minor,
    nearembed,
    separation,
    surface,
    tangle,
    utils,
    vortex,
)


def _lines(flp):
    """(line number, stripped line) for every meaningful line of flp."""
    try:
        with open(flp, "r", encoding="utf-8") as fil:
            for line_num, line in enumerate(fil, start=1):
                line = line.strip()
                if line and not line.startswith("#"):
                    yield line_num, line
    except UnicodeDecodeError as exc:
        raise errors.FormatError(flp, None, f"Not UTF-8 text: {exc.reason}") from exc


def _ints(flp, line_num, text):
    text = text.strip().strip("()")
    if not text:
        return []
    try:
        return [int(tok) for tok in re.split(r"[,\s]+", text) if tok]
    except ValueError as exc:
        raise errors.FormatError(
            flp, line_num, f"Expected integer ids, got: {text}"
        ) from exc


def _exact(flp, line_num, text, count, form):
    """Exactly count integer ids from text, or a FormatError naming form."""
    ids = _ints(flp, line_num, text)
    if len(ids) != count:
        raise errors.FormatError(flp, line_num, f"Expected {form}, got: {text}")
    return ids


def _keyed(flp, line_num, line, key):
    """The ids after "<key>:" on line."""
    if not line.startswith(f"{key}:"):
        raise errors.FormatError(flp, line_num, f'Expected "{key}:", got: {line}')
    return _ints(flp, line_num, line[len(key) + 1 :])


def _edge(flp, line_num, line):
    toks = line.split()
    if len(toks) != 3 or toks[0] != "e":
        raise errors.FormatError(flp, line_num, f'Expected "e <u> <v>", got: {line}')
    src, dst = _exact(flp, line_num, " ".join(toks[1:]), 2, '"e <u> <v>"')
    return src, dst


# Graphs.


def parse_graph(flp):
    """Read `p graph <n> <m>` followed by m `e <u> <v>` lines."""
    header = None
    edges = []
    for line_num, line in _lines(flp):
        if line.startswith("p "):
            toks = line.split()
            if header is not None or len(toks) != 4 or toks[1] != "graph":
                raise errors.FormatError(flp, line_num, f"Bad header: {line}")
            header = _exact(flp, line_num, " ".join(toks[2:]), 2, '"p graph <n> <m>"')
        elif header is None:
            raise errors.FormatError(
                flp, line_num, "Expected the `p graph <n> <m>` header"
            )
        else:
            edges.append(_edge(flp, line_num, line))
    if header is None:
        raise errors.FormatError(flp, None, "Missing the `p graph <n> <m>` header")
    num_v, num_e = header
    if len(edges) != num_e:
        raise errors.FormatError(
            flp, None, f"The header announces {num_e} edges, but there are {len(edges)}"
        )
    return graph.build_graph(num_v, edges)


def dump_graph(g, comments=()):
    lines = [f"p graph {g.vertex_count} {g.num_edges}"]
    lines.extend(f"# {comment}" for comment in comments)
    lines.extend(f"e {src} {dst}" for src, dst in g.edges)
    return "\n".join(lines) + "\n"


# Separations and tangles.


_SEP_RE = re.compile(r"^sep\s+A=(?P<a>[\d,\s]*?)\s*B=(?P<b>[\d,\s]*)$")


def parse_separation(flp, line_num, line):
    match = _SEP_RE.match(line)
    if match is None:
        raise errors.FormatError(
            flp, line_num, f'Expected "sep A=<ids> B=<ids>", got: {line}'
        )
    return separation.Separation.of(
        _ints(flp, line_num, match.group("a")), _ints(flp, line_num, match.group("b"))
    )


def dump_separations(seps):
    return "".join(f"{sep}\n" for sep in seps)


def parse_tangle(flp, g):
    """Read `tangle order=<theta>` and then separation lines, B being the large side."""
    order = None
    members = []
    for line_num, line in _lines(flp):
        if order is None:
            match = re.match(r"^tangle\s+order=(\d+)$", line)
            if match is None:
                raise errors.FormatError(
                    flp, line_num, 'Expected "tangle order=<theta>"'
                )
            order = int(match.group(1))
        else:
            members.append(parse_separation(flp, line_num, line))
    if order is None:
        raise errors.FormatError(flp, None, 'Missing the "tangle order=<theta>" header')
    return tangle.Tangle(g, order, members=members)


def dump_tangle(order, members):
    return f"tangle order={order}\n" + dump_separations(
        sorted(members, key=separation.Separation.sort_key)
    )


# Minor models.


def parse_model(flp, host):
    """Read `model pattern=<graph-file>` followed by `branch <h>: <ids>` lines.

    A relative pattern path is resolved against the directory of flp.
    """
    pattern = None
    branch_sets = {}
    for line_num, line in _lines(flp):
        if pattern is None:
            match = re.match(r"^model\s+pattern=(\S+)$", line)
            if match is None:
                raise errors.FormatError(
                    flp, line_num, 'Expected "model pattern=<graph-file>"'
                )
            pattern_flp = match.group(1)
            if not path.isabs(pattern_flp):
                pattern_flp = path.join(path.dirname(path.abspath(flp)), pattern_flp)
            if not path.isfile(pattern_flp):
                raise errors.FormatError(
                    flp, line_num, f"Pattern file not found: {pattern_flp}"
                )
            pattern = parse_graph(pattern_flp)
            continue
        match = re.match(r"^branch\s+(\d+)\s*:(.*)$", line)
        if match is None:
            raise errors.FormatError(
                flp, line_num, f'Expected "branch <h>: <ids>", got: {line}'
            )
        h = int(match.group(1))
        if h in branch_sets:
            raise errors.FormatError(flp, line_num, f"Branch set {h} appears twice")
        branch_sets[h] = _ints(flp, line_num, match.group(2))
    if pattern is None:
        raise errors.FormatError(
            flp, None, 'Missing the "model pattern=<graph-file>" header'
        )
    return minor.MinorModel(host, pattern, branch_sets)


def dump_model(m, pattern_flp):
    lines = [f"model pattern={pattern_flp}"]
    lines.extend(
        f"branch {h}: {utils.set_to_str(bset)}"
        for h, bset in sorted(m.branch_sets.items())
    )
    return "\n".join(lines) + "\n"


# Rotation systems.


def _rotation_line(flp, line_num, line):
    match = re.match(r"^rot\s+(\d+)\s*:(.*)$", line)
    if match is None:
        raise errors.FormatError(
            flp, line_num, f'Expected "rot <v>: <ids>", got: {line}'
        )
    return int(match.group(1)), tuple(_ints(flp, line_num, match.group(2)))


def parse_rotation(flp, g):
    """Read `rot <v>: <neighbors in cyclic order>` lines, one per vertex."""
    rotation = {}
    for line_num, line in _lines(flp):
        vtx, nbrs = _rotation_line(flp, line_num, line)
        if vtx in rotation:
            raise errors.FormatError(flp, line_num, f"Vertex {vtx} has two rotations")
        rotation[vtx] = nbrs
    for vtx in rotation:
        if not 0 <= vtx < g.vertex_count:
            raise errors.VertexOutOfRange(
                f"Rotation for vertex {vtx}, which is not in the graph"
            )
    return surface.RotationSystem(g, [rotation.get(vtx, ()) for vtx in g.vertices])


def dump_rotation(rs):
    return "".join(
        f"rot {rs.graph.labels[vtx]}: "
        f"{utils.ids_to_str(rs.graph.labels[nbr] for nbr in nbrs)}\n"
        for vtx, nbrs in enumerate(rs.rotation)
    )


# Vortex certificates.


def _vortex_line(flp, line_num, line, blk):
    """Parse one line of a vortex block into blk; False if it belongs elsewhere."""
    if line.startswith("vortex "):
        match = re.match(r"^vortex\s+society=(.*)$", line)
        if match is None:
            raise errors.FormatError(
                flp, line_num, f'Expected "vortex society=<ids>", got: {line}'
            )
        blk["society"] = _ints(flp, line_num, match.group(1))
    elif line.startswith("bag "):
        match = re.match(r"^bag\s+(\d+)\s*:(.*)$", line)
        if match is None:
            raise errors.FormatError(
                flp, line_num, f'Expected "bag <i>: <ids>", got: {line}'
            )
        idx = int(match.group(1))
        if idx != len(blk["bags"]) + 1:
            raise errors.FormatError(
                flp, line_num, f"Expected bag {len(blk['bags']) + 1}, got bag {idx}"
            )
        blk["bags"].append(_ints(flp, line_num, match.group(2)))
    elif line.startswith("spine:"):
        blk["spine"] = _keyed(flp, line_num, line, "spine")
    elif line.startswith("tooth:"):
        blk["teeth"].append(_keyed(flp, line_num, line, "tooth"))
    elif line.startswith("linkpath:"):
        blk["linkpaths"].append(_keyed(flp, line_num, line, "linkpath"))
    elif line.startswith("vertices:"):
        blk["vertices"] = _keyed(flp, line_num, line, "vertices")
    elif line.startswith("society:"):
        blk["society"] = _keyed(flp, line_num, line, "society")
    elif line == "edges:":
        blk["edges"] = []
    elif line.startswith("e ") and blk.get("edges") is not None:
        blk["edges"].append(_edge(flp, line_num, line))
    else:
        return False
    return True


def _new_block(index=None):
    return {"index": index, "society": None, "bags": [], "teeth": [], "linkpaths": []}


def parse_vortex_cert(flp, g):
    """Read a standalone vortex certificate for the vortex (g, society).

    Returns (Vortex, VortexDecomposition, Comb or None).
    """
    blk = _new_block()
    for line_num, line in _lines(flp):
        if not _vortex_line(flp, line_num, line, blk):
            raise errors.FormatError(flp, line_num, f"Unexpected line: {line}")
    if blk["society"] is None:
        raise errors.FormatError(flp, None, 'Missing the "vortex society=<ids>" line')
    vtx = vortex.Vortex(g, blk["society"])
    comb = vortex.Comb.of(blk["spine"], blk["teeth"]) if blk.get("spine") else None
    return vtx, vortex.VortexDecomposition.of(blk["bags"]), comb


def dump_vortex_cert(v, d, comb=None):
    lines = [f"vortex society={utils.ids_to_str(v.society)}"]
    lines.extend(
        f"bag {idx}: {utils.set_to_str(bag)}" for idx, bag in enumerate(d.bags, start=1)
    )
    if comb is not None:
        lines.append(f"spine: {utils.ids_to_str(comb.spine)}")
        lines.extend(f"tooth: {utils.ids_to_str(path)}" for path in comb.teeth_paths)
    return "\n".join(lines) + "\n"


# Near-embedding certificates.


_DISC_RE = re.compile(
    r"^disc\s+(?P<idx>\d+)\s*:\s*face=(?P<face>\d+)"
    r"\s+start=\(?(?P<src>\d+)\s*,\s*(?P<dst>\d+)\)?"
    r"\s+dir=(?P<dir>[+-])$"
)


def parse_certificate(flp, g):
    """Read a near-embedding certificate for g."""
    apex, g0_vertices, g0_edges = [], None, []
    rotation, discs = {}, {}
    rot_lines, disc_lines = {}, {}
    large, small = [], []
    section, blk = None, None
    for line_num, line in _lines(flp):
        if line.startswith("apex:"):
            apex, section = _keyed(flp, line_num, line, "apex"), None
        elif line.startswith("g0-vertices:"):
            g0_vertices, section = _keyed(flp, line_num, line, "g0-vertices"), None
        elif line == "g0-edges:":
            section = "g0"
        elif line.startswith("rot "):
            vtx, nbrs = _rotation_line(flp, line_num, line)
            if vtx in rotation:
                raise errors.FormatError(
                    flp, line_num, f"Vertex {vtx} has two rotations"
                )
            rotation[vtx], rot_lines[vtx] = nbrs, line_num
            section = None
        elif line.startswith("disc "):
            match = _DISC_RE.match(line)
            if match is None:
                raise errors.FormatError(
                    flp,
                    line_num,
                    'Expected "disc <i>: face=<f> start=<u>,<v> dir=<+|->"',
                )
            idx = int(match.group("idx"))
            if idx in discs:
                raise errors.FormatError(flp, line_num, f"Vortex {idx} has two discs")
            disc_lines[idx] = line_num
            discs[idx] = (
                int(match.group("face")),
                (int(match.group("src")), int(match.group("dst"))),
                1 if match.group("dir") == "+" else -1,
            )
            section = None
        elif re.match(r"^(large|small)vortex\s+\d+$", line):
            kind, idx = line.split()
            blk = _new_block(int(idx))
            (large if kind == "largevortex" else small).append(blk)
            section = "block"
        elif section == "g0" and line.startswith("e "):
            g0_edges.append(_edge(flp, line_num, line))
        elif section == "block" and _vortex_line(flp, line_num, line, blk):
            pass
        else:
            raise errors.FormatError(flp, line_num, f"Unexpected line: {line}")
    if g0_vertices is None:
        raise errors.FormatError(flp, None, 'Missing the "g0-vertices:" line')
    for blk in large + small:
        if blk["society"] is None:
            raise errors.FormatError(flp, None, f"Vortex {blk['index']} has no society")
    for blk in small:
        if blk.get("vertices") is None:
            raise errors.FormatError(
                flp, None, f"Small vortex {blk['index']} has no vertices"
            )
    for vtx, line_num in rot_lines.items():
        if vtx not in g0_vertices:
            raise errors.FormatError(
                flp, line_num, f"Rotation for vertex {vtx}, which is not in G0"
            )
    indices = {blk["index"] for blk in large + small}
    for idx, line_num in disc_lines.items():
        if idx not in indices:
            raise errors.FormatError(
                flp, line_num, f"Disc for vortex {idx}, which is not in the certificate"
            )
    return nearembed.make_certificate(
        g, apex, g0_vertices, g0_edges, rotation, large, small, discs
    )
