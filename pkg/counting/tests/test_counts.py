import random
from collections import Counter

from django.test import SimpleTestCase

from counting.counts import CountMethod, brute_force_J, count_J, count_sweep
from counting.histogram import KeyCodec, build_histogram, convolve
from lab.exceptions import ParameterError, ResourceCapError
from monomials.systems import enumerate_indices


class HistogramTests(SimpleTestCase):
    def test_single_summand_keys(self):
        histogram = build_histogram(enumerate_indices(1, 2), 1, 2)
        self.assertEqual(histogram.vectors(), [((1, 1), 1), ((2, 4), 1)])

    def test_totals(self):
        self.assertEqual(build_histogram(enumerate_indices(1, 2), 2, 2).total, 4)
        self.assertEqual(build_histogram(enumerate_indices(2, 2), 2, 2).total, 16)

    def test_keys_stay_in_the_moment_box(self):
        system = enumerate_indices(2, 3)
        s, N = 2, 3
        histogram = build_histogram(system, s, N)
        self.assertEqual(histogram.total, N ** (system.d * s))
        for vector, _ in histogram.vectors():
            for value, degree in zip(vector, system.degrees):
                self.assertTrue(0 < value <= s * N ** degree)

    def test_big_endian_key_bytes(self):
        system = enumerate_indices(1, 2)
        codec = KeyCodec.for_system(system, 2, 2)
        self.assertEqual(codec.widths, (1, 1))
        key = codec.encode((1, 4))
        self.assertEqual(codec.key_bytes(key), b"\x01\x04")
        self.assertEqual(codec.decode(key), (1, 4))

    def test_keys_add_as_vectors(self):
        codec = KeyCodec.for_system(enumerate_indices(2, 3), 3, 5)
        a, b = (1, 2, 1, 2, 4, 1, 2, 4, 8), (3, 1, 9, 3, 1, 27, 9, 3, 1)
        self.assertEqual(codec.decode(codec.encode(a) + codec.encode(b)), tuple(x + y for x, y in zip(a, b)))

    def test_process_shards_match_single_shard(self):
        left = Counter({key: key % 5 + 1 for key in range(0, 400, 7)})
        right = Counter({key: 2 for key in range(0, 90, 3)})
        self.assertEqual(convolve(left, right, workers=3), convolve(left, right, workers=1))
        self.assertEqual(sum(convolve(left, right, workers=3).values()), sum(left.values()) * sum(right.values()))

    def test_memory_cap(self):
        with self.assertRaises(ResourceCapError) as caught:
            build_histogram(enumerate_indices(2, 3), 4, 6, mem_cap=1024)
        self.assertEqual(caught.exception.cap, 1024)

    def test_split_out_of_range(self):
        with self.assertRaises(ParameterError):
            build_histogram(enumerate_indices(1, 2), 2, 3, split=3)


class CountTests(SimpleTestCase):
    def test_first_order_count_is_diagonal(self):
        rng = random.Random(2)
        for _ in range(20):
            d, k, N = rng.randint(1, 3), rng.randint(2, 4), rng.randint(1, 6)
            self.assertEqual(count_J(enumerate_indices(d, k), 1, N).J, N ** d)

    def test_linear_fixture(self):
        system = enumerate_indices(1, 1, linear=True)
        self.assertEqual(count_J(system, 2, 2).J, 6)
        self.assertEqual(brute_force_J(system, 2, 2).J, 6)

    def test_quadratic_curve(self):
        result = count_J(enumerate_indices(1, 2), 2, 3)
        self.assertEqual(result.J, 15)
        self.assertEqual(result.method, CountMethod.MEET_IN_MIDDLE)
        self.assertEqual(brute_force_J(enumerate_indices(1, 2), 2, 3).J, 15)

    def test_brute_force_examples(self):
        self.assertEqual(brute_force_J(enumerate_indices(2, 3), 1, 4).J, 16)
        system = enumerate_indices(2, 2)
        self.assertEqual(brute_force_J(system, 2, 2).J, count_J(system, 2, 2).J)

    def test_oracle_equivalence_grid(self):
        for d in (1, 2):
            for k in (2, 3):
                system = enumerate_indices(d, k)
                for s in (1, 2, 3):
                    for N in range(2, 7):
                        if N ** (2 * d * s) > 10 ** 8:
                            continue
                        with self.subTest(d=d, k=k, s=s, N=N):
                            fast = count_J(system, s, N)
                            self.assertEqual(fast.J, brute_force_J(system, s, N).J)
                            self.assertTrue(fast.within_trivial_bounds())

    def test_split_invariance(self):
        system = enumerate_indices(2, 2)
        values = {count_J(system, 3, 3, split).J for split in (1, 2, 3)}
        self.assertEqual(len(values), 1)

    def test_shard_invariance(self):
        system = enumerate_indices(2, 3)
        self.assertEqual(count_J(system, 2, 4, workers=1).J, count_J(system, 2, 4, workers=4).J)

    def test_monotone_in_N_and_s(self):
        system = enumerate_indices(1, 2)
        by_N = [count_J(system, 2, N).J for N in range(1, 7)]
        self.assertEqual(by_N, sorted(by_N))
        by_s = [count_J(system, s, 3).J for s in (1, 2, 3, 4)]
        self.assertEqual(by_s, sorted(by_s))

    def test_enumeration_cap(self):
        with self.assertRaises(ResourceCapError):
            brute_force_J(enumerate_indices(2, 3), 3, 6, cap=10 ** 6)

    def test_sweep_has_one_row_per_N(self):
        rows = count_sweep(enumerate_indices(1, 2), 2, range(2, 7))
        self.assertEqual([row["N"] for row in rows], [2, 3, 4, 5, 6])
        self.assertIsNone(rows[0]["slope"])
        self.assertEqual(rows[1]["J"], "15")
