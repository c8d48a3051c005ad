"""Generator reproducibility and instance file round-trips."""

import pytest

from maximinloc.geom import Point
from maximinloc.instances import (GeneratorState, InstanceFormatError,
                                  InstanceSpec, generate, generate_points,
                                  lcg_next, make_instance, read_instance,
                                  read_points, write_instance)

REFERENCE_POINTS = """\
1 0.0097 0.0367 1.12347
2 8.5243 8.4373 1.67993
3 8.4217 5.3687 1.06467
4 4.7523 0.1453 1.20273
5 8.3537 5.4207 1.15787
6 3.8603 5.5333 1.01353
7 9.0057 1.3927 1.32307
8 0.6483 7.4013 1.59233
9 1.5777 6.4847 1.68027
10 7.9163 6.5493 1.21913
11 9.2697 5.8967 1.54947
12 6.4643 1.7773 1.97393
13 7.2817 6.8287 1.45067
14 5.0923 9.8853 1.73673
15 2.8137 8.4807 1.10387
16 0.6003 5.6733 1.18753
17 5.0657 2.0527 1.42907
18 7.7883 1.9413 1.80633
19 5.2377 0.7447 1.54627
20 9.4563 9.4893 1.87313
21 6.5297 9.7567 1.77547
22 6.4043 7.1173 1.46793
23 4.1417 6.2887 1.63667
24 7.4323 1.6253 1.47073
25 5.2737 9.5407 1.84987
26 9.3403 7.8133 1.56153
27 9.1257 0.7127 1.33507
28 6.9283 8.4813 1.22033
29 6.8977 3.0047 1.21227
30 2.9963 4.4293 1.72713"""


class TestGeneratorState:
    def test_advance_from_x_seed(self):
        assert lcg_next(GeneratorState(value=97)).value == 85243
        assert lcg_next(GeneratorState(value=85243)).value == 84217

    def test_advance_from_y_seed(self):
        assert lcg_next(GeneratorState(value=367)).value == 84373

    def test_range_validation(self):
        with pytest.raises(ValueError):
            GeneratorState(value=0)
        with pytest.raises(ValueError):
            GeneratorState(value=100000)

    def test_multiplier_validation(self):
        with pytest.raises(ValueError):
            GeneratorState(value=97, multiplier=12220)
        with pytest.raises(ValueError):
            GeneratorState(value=97, multiplier=12215)


class TestGeneratePoints:
    def test_first_point(self):
        p = generate_points(1)[0]
        assert (p.location.x, p.location.y, p.weight) == (0.0097, 0.0367, 1.12347)

    def test_thirtieth_point(self):
        p = generate_points(30)[-1]
        assert f"{p.location.x:.4f}" == "2.9963"
        assert f"{p.location.y:.4f}" == "4.4293"
        assert f"{p.weight:.5f}" == "1.72713"

    def test_first_thirty_match_reference_table(self):
        pts = generate_points(30)
        for line in REFERENCE_POINTS.splitlines():
            i, x, y, w = line.split()
            p = pts[int(i) - 1]
            assert f"{p.location.x:.4f}" == x
            assert f"{p.location.y:.4f}" == y
            assert f"{p.weight:.5f}" == w

    def test_ranges(self):
        pts = generate_points(1000)
        for p in pts:
            assert 0 < p.location.x < 10
            assert 0 < p.location.y < 10
            assert 1 < p.weight < 2

    def test_repeatable(self):
        assert generate_points(200) == generate_points(200)


class TestGenerateInstance:
    def test_hull_region(self):
        inst = generate(InstanceSpec(n=100))
        assert inst.n == 100
        assert len(inst.region.vertices) == 9

    def test_square_region(self):
        inst = generate(InstanceSpec(n=100, region="square"))
        assert inst.region.bounds == (0.0, 0.0, 10.0, 10.0)

    def test_n_below_three_rejected(self):
        with pytest.raises(ValueError):
            InstanceSpec(n=2)


class TestInstanceFiles:
    def test_round_trip(self, tmp_path):
        inst = generate(InstanceSpec(n=100))
        path = str(tmp_path / "i100.csv")
        write_instance(inst, path)
        again = read_instance(path, region="hull")
        assert again.points == inst.points
        assert again.region == inst.region

    def test_table_row_parses(self, tmp_path):
        path = tmp_path / "one.csv"
        path.write_text("id,x,y,w\n1,0.0097,0.0367,1.12347\n2,1,1,1\n3,2,0,1\n")
        pts = read_points(str(path))
        assert pts[0].id == 1
        assert pts[0].location == Point(0.0097, 0.0367)
        assert pts[0].weight == 1.12347

    def test_zero_weight_rejected_with_line_number(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("id,x,y,w\n1,0.5,0.5,0\n")
        with pytest.raises(InstanceFormatError, match=":2"):
            read_points(str(path))

    def test_wrong_column_count_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("id,x,y,w\n1,0.5,0.5\n")
        with pytest.raises(InstanceFormatError, match="4 columns"):
            read_points(str(path))

    def test_non_numeric_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("id,x,y,w\n1,a,0.5,1\n")
        with pytest.raises(InstanceFormatError):
            read_points(str(path))

    def test_missing_file(self):
        with pytest.raises(OSError):
            read_points("/nonexistent/file.csv")

    def test_full_precision_round_trip(self, tmp_path):
        pts = generate_points(50)
        inst = make_instance(pts)
        path = str(tmp_path / "p.csv")
        write_instance(inst, path)
        again = read_points(path)
        for a, b in zip(pts, again):
            assert a.location.x == b.location.x
            assert a.location.y == b.location.y
            assert a.weight == b.weight
