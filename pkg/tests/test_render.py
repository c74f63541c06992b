import re

from hogames.fixtures import crossing_play
from hogames.gadget import apply_gadget
from hogames.render import render_ascii, render_dot


def test_dot_has_one_node_per_move_and_one_arc_per_pointer():
    text = render_dot(crossing_play(), name="crossing")
    assert text.startswith('digraph "crossing" {')
    assert len(re.findall(r"^  n\d+ \[", text, re.M)) == 9
    assert len(re.findall(r"constraint=false", text)) == 8
    assert "n7 -> n4 [constraint=false, color=blue]" in text
    assert "n8 -> n3 [constraint=false, color=red]" in text


def test_dot_is_deterministic():
    assert render_dot(crossing_play()) == render_dot(crossing_play())


def test_dot_marks_highlighted_moves():
    g = apply_gadget(crossing_play())
    inserted = [i for i, o in enumerate(g.origin) if not isinstance(o, int)]
    text = render_dot(g.play, highlight=inserted)
    assert text.count("style=dashed") == len(inserted) > 0


def test_dot_escapes_quotes():
    from hogames.core import STAR, Arena, Play

    labels = {STAR: "O", 'a"b': "P"}
    a = Arena(labels, [(STAR, 'a"b')], labels, {STAR})
    assert r'label="1: a\"b"' in render_dot(Play(a, [STAR, 'a"b'], [None, 0]))


def test_ascii_rows_and_lanes():
    rows = render_ascii(crossing_play()).splitlines()
    assert len(rows) == 9
    assert rows[7].endswith("7 P  c4 -> 4")
    # every arc opens once and closes once
    text = "\n".join(rows)
    assert text.count("+") >= 1 and text.count("'") == 8


def _arcs_from_lanes(text):
    rows = text.splitlines()
    width = max(len(r) - len(r.lstrip(" +|'")) for r in rows)
    arcs = set()
    for col in range(width):
        opened = None
        for i, r in enumerate(rows):
            c = r[col] if col < len(r) else " "
            if c == "+":
                assert opened is None, "two arcs open in one lane"
                opened = i
            elif c == "'":
                arcs.add((opened, i))
                opened = None
            elif c == "|":
                assert opened is not None
        assert opened is None
    return arcs


def test_ascii_lanes_read_back_as_the_pointers():
    s = crossing_play()
    assert _arcs_from_lanes(render_ascii(s)) == {(t, i) for i, t in enumerate(s.pointers) if t is not None}


def test_ascii_tags_highlighted_moves():
    g = apply_gadget(crossing_play())
    inserted = [i for i, o in enumerate(g.origin) if not isinstance(o, int)]
    rows = render_ascii(g.play, highlight=inserted).splitlines()
    tagged = [i for i, r in enumerate(rows) if re.search(r"\d [PO]\* ", r)]
    assert tagged == inserted
