import xml.etree.ElementTree as ET

from prelam import corpus
from prelam.lamination import make
from prelam.render import RenderStyle, render

NS = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg)


def classes(root, cls):
    return [el for el in root.iter() if el.get("class") == cls]


def test_prong_has_one_shaded_triangle():
    al = corpus.gen_prong(3)
    root = parse(render(al))
    assert root.tag == NS + "svg" and root.get("version") == "1.1"
    stars = classes(root, "star")
    assert len(stars) == 1
    # three chords from the star polygon, closed path
    assert stars[0].get("d").count("L") >= 3 and stars[0].get("d").endswith("Z")
    assert len(classes(root, "leaf")) == len(al.leaves)
    assert not classes(root, "shell") and not classes(root, "root")


def test_shells_shade_and_dash_roots():
    al = corpus.gen_shell_family(3)
    root = parse(render(al))
    assert len(classes(root, "shell")) == 1
    roots = classes(root, "root")
    assert len(roots) == 1 and roots[0].get("stroke-dasharray")


def test_empty_lamination_is_just_the_circle():
    root = parse(render(make([])))
    drawn = [el for el in root if el.tag != NS + "title"]
    assert [el.tag for el in drawn] == [NS + "circle"]


def test_output_is_deterministic():
    al = corpus.gen_random(5)[0]
    assert render(al) == render(al)
    assert render(al, RenderStyle(size=256)) != render(al)


def test_raw_virtual_chords_are_dotted():
    raw, _, _ = corpus.gen_regular_two_completions()
    root = parse(render(raw))
    assert len(classes(root, "virtual")) == len(raw.virtual)
