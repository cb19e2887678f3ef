#! /usr/bin/env python3
""" Tests for the text formats. """

from os import path
import tempfile
import unittest

from tanglekit.core import (
    errors,
    fixtures,
    formats,
    grid,
    nearembed,
    report,
    separation,
    surface,
    tangle,
    vortex,
)

TEST_DATA_DIR = path.join(
    path.dirname(path.dirname(path.realpath(__file__))), "test_data"
)


def data(fln):
    return path.join(TEST_DATA_DIR, fln)


class TextFileTestCase(unittest.TestCase):
    """ Writes throwaway files into a temporary directory. """

    def setUp(self):
        self.tmp_dir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp_dir.cleanup()

    def write(self, fln, text):
        flp = path.join(self.tmp_dir.name, fln)
        with open(flp, "w", encoding="utf-8") as fil:
            fil.write(text)
        return flp


class TestGraphFormat(TextFileTestCase):
    """ Tests for graph files. """

    def test_parse(self):
        """ Parses the graph files in the test data. """
        self.assertEqual(formats.parse_graph(data("w3.graph")), grid.make_grid(3).graph)
        g = formats.parse_graph(data("composite.graph"))
        self.assertEqual(g, fixtures.composite_graph())
        self.assertEqual(formats.parse_graph(data("k6.graph")).num_edges, 15)

    def test_dump(self):
        """ A dumped graph parses back to itself. """
        g = fixtures.caterpillar_graph()
        flp = self.write("out.graph", formats.dump_graph(g, comments=["caterpillar"]))
        self.assertEqual(formats.parse_graph(flp), g)

    def test_errors(self):
        """ Malformed graph files raise FormatError. """
        bad = {
            "no header": "e 0 1\n",
            "missing header": "# nothing\n",
            "two headers": "p graph 2 0\np graph 2 0\n",
            "count": "p graph 3 2\ne 0 1\n",
            "edge": "p graph 3 1\nedge 0 1\n",
            "ints": "p graph 3 1\ne 0 x\n",
            "comma-joined edge": "p graph 3 1\ne 0,1 2\n",
            "comma-joined header": "p graph 1,2 3\n",
            "short edge": "p graph 3 1\ne 0\n",
        }
        for name, text in bad.items():
            with self.assertRaises(errors.FormatError, msg=name):
                formats.parse_graph(self.write("bad.graph", text))

    def test_line_numbers(self):
        """ FormatError names the offending line. """
        flp = self.write("bad.graph", "# header\np graph 3 1\ne 0 x\n")
        with self.assertRaises(errors.FormatError) as ctx:
            formats.parse_graph(flp)
        self.assertEqual(ctx.exception.line_num, 3)
        self.assertIn(":3:", str(ctx.exception))

    def test_not_utf8(self):
        """ A file that is not UTF-8 text raises FormatError. """
        flp = path.join(self.tmp_dir.name, "binary.graph")
        with open(flp, "wb") as fil:
            fil.write(b"p graph 2 1\ne 0 1\n\xff\n")
        with self.assertRaises(errors.FormatError) as ctx:
            formats.parse_graph(flp)
        self.assertIn("Not UTF-8", str(ctx.exception))

    def test_graph_errors(self):
        """ Loops and unknown vertices raise their own errors. """
        with self.assertRaises(errors.LoopEdge):
            formats.parse_graph(self.write("loop.graph", "p graph 2 1\ne 1 1\n"))
        with self.assertRaises(errors.VertexOutOfRange):
            formats.parse_graph(self.write("range.graph", "p graph 2 1\ne 0 2\n"))


class TestTangleFormat(TextFileTestCase):
    """ Tests for tangle files. """

    def test_parse(self):
        """ Parses the natural tangle of W_2. """
        w2 = grid.make_grid(2).graph
        tng = formats.parse_tangle(data("w2_natural.tangle"), w2)
        self.assertEqual(tng.order_threshold, 2)
        self.assertEqual(len(tng.members), 5)
        self.assertIn(separation.Separation.of((), range(4)), tng)

    def test_dump(self):
        """ Dumping the natural tangle of W_2 reproduces the test data file. """
        w = grid.make_grid(2)
        members = tangle.natural_tangle(w).sorted_members()
        flp = self.write("w2.tangle", formats.dump_tangle(2, members))
        with open(data("w2_natural.tangle"), encoding="utf-8") as fil:
            expected = [line for line in fil if not line.startswith("#")]
        with open(flp, encoding="utf-8") as fil:
            self.assertEqual(fil.readlines(), expected)

    def test_errors(self):
        """ Malformed tangle files raise FormatError. """
        w2 = grid.make_grid(2).graph
        bad = [
            "sep A=0 B=0,1,2,3\n",
            "tangle order=2\nsep A=0\n",
            "tangle order=x\n",
            "",
        ]
        for text in bad:
            with self.assertRaises(errors.FormatError, msg=text):
                formats.parse_tangle(self.write("bad.tangle", text), w2)

    def test_separation_line(self):
        """ Separation lines allow spaces after commas. """
        sep = formats.parse_separation("-", 1, "sep A=0, 1 B=1,2")
        self.assertEqual(sep, separation.Separation.of({0, 1}, {1, 2}))
        self.assertEqual(str(sep), "sep A=0,1 B=1,2")


class TestModelFormat(TextFileTestCase):
    """ Tests for minor model files. """

    def test_parse(self):
        """ Parses a valid and an overlapping model. """
        model = formats.parse_model(data("edge_in_path.model"), fixtures.path_graph(3))
        self.assertEqual(model.branch_sets, {0: frozenset({0, 1}), 1: frozenset({2})})
        self.assertTrue(model.report().passed)
        overlap = formats.parse_model(
            data("edge_in_path_overlap.model"), fixtures.path_graph(3)
        )
        kinds = overlap.report().kinds()
        self.assertEqual(kinds, [report.ViolationKind.OVERLAPPING_BRANCH_SETS])

    def test_dump(self):
        """ A dumped model parses back to the same branch sets. """
        model = fixtures.w2_in_w3_model()
        self.write("w2.graph", formats.dump_graph(model.pattern))
        flp = self.write("w2.model", formats.dump_model(model, "w2.graph"))
        parsed = formats.parse_model(flp, model.host)
        self.assertEqual(parsed.branch_sets, model.branch_sets)

    def test_errors(self):
        """ Malformed model files raise FormatError. """
        host = fixtures.path_graph(3)
        self.write("edge.graph", "p graph 2 1\ne 0 1\n")
        bad = [
            "model pattern=missing.graph\n",
            "branch 0: 0\n",
            "model pattern=edge.graph\nbranch 0: 0\nbranch 0: 1\n",
            "model pattern=edge.graph\nbranch x: 0\n",
        ]
        for text in bad:
            with self.assertRaises(errors.FormatError, msg=text):
                formats.parse_model(self.write("bad.model", text), host)


class TestRotationFormat(TextFileTestCase):
    """ Tests for rotation files. """

    def test_parse(self):
        """ Parses the K5 and W_3 rotations. """
        rs = formats.parse_rotation(data("k5.rotation"), fixtures.complete_graph(5))
        self.assertEqual(rs.rotation, fixtures.k5_torus_rotation().rotation)
        self.assertEqual(surface.euler_genus(rs), 2)
        rs = formats.parse_rotation(data("w3.rotation"), grid.make_grid(3).graph)
        self.assertEqual(rs.rotation, grid.planar_rotation(grid.make_grid(3)).rotation)

    def test_dump(self):
        """ A dumped rotation parses back to itself. """
        rs = fixtures.k4_planar_rotation()
        flp = self.write("k4.rotation", formats.dump_rotation(rs))
        self.assertEqual(formats.parse_rotation(flp, rs.graph).rotation, rs.rotation)

    def test_errors(self):
        """ Each kind of bad rotation file raises its own error. """
        g = fixtures.path_graph(3)
        cases = [
            ("rot 0: 1\nrot 0: 1\n", errors.FormatError),
            ("rotation 0: 1\n", errors.FormatError),
            ("rot 5: 1\n", errors.VertexOutOfRange),
            ("rot 0: 1\nrot 1: 0\n", errors.InvalidRotation),
        ]
        for text, exc in cases:
            with self.assertRaises(exc, msg=text):
                formats.parse_rotation(self.write("bad.rotation", text), g)


class TestVortexFormat(TextFileTestCase):
    """ Tests for vortex certificates. """

    def test_parse(self):
        """ Parses the caterpillar with and without a comb. """
        g = formats.parse_graph(data("caterpillar.graph"))
        vtx, dec, comb = formats.parse_vortex_cert(data("caterpillar.vortex"), g)
        expected_vtx, expected_dec, expected_comb = fixtures.caterpillar()
        self.assertEqual(vtx.society, expected_vtx.society)
        self.assertEqual(dec, expected_dec)
        self.assertEqual(comb, expected_comb)
        _, _, comb = formats.parse_vortex_cert(data("caterpillar_missing.vortex"), g)
        self.assertIsNone(comb)

    def test_dump(self):
        """ A dumped vortex certificate parses back to itself. """
        vtx, dec, comb = fixtures.caterpillar()
        flp = self.write("out.vortex", formats.dump_vortex_cert(vtx, dec, comb))
        self.assertEqual(formats.parse_vortex_cert(flp, vtx.graph)[1:], (dec, comb))

    def test_errors(self):
        """ Malformed vortex certificates raise FormatError. """
        g = fixtures.caterpillar_graph()
        bad = [
            "bag 1: 0,4\n",
            "vortex society=4,5,6,7\nbag 2: 0,4\n",
            "vortex society=4,5,6,7\nstem: 0,1\n",
            "vortex 4,5,6,7\n",
        ]
        for text in bad:
            with self.assertRaises(errors.FormatError, msg=text):
                formats.parse_vortex_cert(self.write("bad.vortex", text), g)
        with self.assertRaises(errors.InvalidVortex):
            flp = self.write("bad.vortex", "vortex society=4,9\n")
            formats.parse_vortex_cert(flp, g)


class TestCertificateFormat(TextFileTestCase):
    """ Tests for near-embedding certificates. """

    def test_parse(self):
        """ The composite certificate file matches the composite fixture. """
        g = formats.parse_graph(data("composite.graph"))
        cert = formats.parse_certificate(data("composite.cert"), g)
        expected = fixtures.composite_certificate(g)
        self.assertEqual(cert.discs, expected.discs)
        self.assertEqual(cert.g0, expected.g0)
        self.assertEqual(cert.rotation.rotation, expected.rotation.rotation)
        self.assertEqual(cert.large[0].comb, expected.large[0].comb)
        self.assertEqual(cert.large[0].linkage, expected.large[0].linkage)
        self.assertEqual(cert.small[0].vortex.society, (6, 7, 8))
        self.assertTrue(nearembed.validate_certificate(g, cert, None).passed)

    def test_reversed_disc(self):
        """ A disc walked the wrong way parses, then fails validation. """
        g = formats.parse_graph(data("composite.graph"))
        cert = formats.parse_certificate(data("composite_reversed_disc.cert"), g)
        self.assertEqual(cert.discs[2], nearembed.Disc(1, (6, 7), -1))
        rep = nearembed.validate_certificate(g, cert, None)
        self.assertEqual(rep.kinds(), [report.ViolationKind.SOCIETY_NOT_ON_FACE])

    def test_explicit_edges(self):
        """ A small vortex can list its edges. """
        g = fixtures.composite_graph()
        text = (
            "g0-vertices: 0,1,2,3,4,5,6,7,8\n"
            "smallvortex 2\n"
            "vertices: 6,7,8,16\n"
            "society: 6,7,8\n"
            "edges:\n"
            "e 6 16\n"
            "e 7 16\n"
        )
        cert = formats.parse_certificate(self.write("edges.cert", text), g)
        self.assertEqual(cert.small[0].vortex.graph.label_edges(), {(6, 16), (7, 16)})
        self.assertIsInstance(cert.small[0].vortex, vortex.Vortex)

    def test_errors(self):
        """
        Malformed certificates, including stray rotations and discs, raise FormatError.
        """
        g = fixtures.composite_graph()
        bad = [
            "apex:\n",
            "g0-vertices: 0,1\ndisc 1: face=0 start=0,1\n",
            "g0-vertices: 0,1\nsmallvortex 2\nsociety: 0,1\n",
            "g0-vertices: 0,1\nlargevortex 1\nbag 1: 0\n",
            "g0-vertices: 0,1\nwhatever\n",
            "g0-vertices: 0,1\nrot 0: 1\nrot 0: 1\n",
            "g0-vertices: 0,1\nrot 5: 1\n",
            "g0-vertices: 0,1\ndisc 3: face=0 start=0,1 dir=+\n",
            "g0-vertices: 0,1\ndisc 1: face=0 start=0,1 dir=+\n"
            "disc 1: face=0 start=1,0 dir=+\n"
            "smallvortex 1\nvertices: 0,1\nsociety: 0,1\n",
        ]
        for text in bad:
            with self.assertRaises(errors.FormatError, msg=text):
                formats.parse_certificate(self.write("bad.cert", text), g)


if __name__ == "__main__":
    unittest.main()
