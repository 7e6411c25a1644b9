"""Frozen reference values for the acceptance suite.

Measure order everywhere matches permlab.batch.PCA_MEASURES. Correlation
tables are lower triangles keyed (row, col) by that order; component tables
carry the first five components per measure.
"""

MEASURE_ORDER = (
    "exact-match", "interchange", "acyclic-edge", "cyclic-edge", "rtype",
    "cyclic-rtype", "kendall-tau", "reinsertion", "deviation",
    "squared-deviation", "lee",
)


def _triangle(rows):
    table = {}
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            table[(i, j)] = value
    return table


# exhaustive enumeration at length 10
CORRELATIONS_N10 = _triangle([
    (1.0,),
    (.766, 1.0),
    (.019, .070, 1.0),
    (-.000, .056, .899, 1.0),
    (.024, .009, .628, .564, 1.0),
    (-.000, -.010, .557, .619, .911, 1.0),
    (.328, .241, -.000, .000, .085, .075, 1.0),
    (.301, .182, .102, .100, .422, .392, .704, 1.0),
    (.515, .395, .008, -.000, .020, -.000, .931, .650, 1.0),
    (.333, .255, -.000, -.000, .017, -.000, .984, .623, .947, 1.0),
    (.556, .426, .019, .000, .014, -.000, .447, .452, .703, .455, 1.0),
])

EIGENVALUES_N10 = (4.3644, 3.1148, 1.4740, 0.8367, 0.5465, 0.2492, 0.2120,
                   0.1575, 0.0315, 0.0107, 0.0026)

PROPORTIONS_N10 = (0.3968, 0.2832, 0.1340, 0.0761, 0.0497, 0.0227, 0.0193,
                   0.0143, 0.0029, 0.0010, 0.0002)

# first five components per measure
EIGENVECTORS_N10 = {
    "exact-match":       (.2984, .0958, .5419, -.1573, .1423),
    "interchange":       (.2487, .0695, .6058, -.0586, .3936),
    "acyclic-edge":      (.0854, -.4751, .1354, .4611, -.0635),
    "cyclic-edge":       (.0805, -.4768, .1194, .4674, -.0455),
    "rtype":             (.1271, -.4873, -.0576, -.3803, .0517),
    "cyclic-rtype":      (.1153, -.4874, -.0666, -.3793, .0510),
    "kendall-tau":       (.4216, .0928, -.3110, .1400, .2292),
    "reinsertion":       (.3721, -.0848, -.2529, -.3795, -.0509),
    "deviation":         (.4516, .1321, -.1089, .1630, -.0651),
    "squared-deviation": (.4140, .1189, -.2828, .2444, .2218),
    "lee":               (.3381, .1027, .2157, -.0476, -.8396),
}

LOADINGS_N10 = {
    "exact-match":       (.6234, .1691, .6579, -.1439, .1052),
    "interchange":       (.5196, .1227, .7355, -.0536, .2910),
    "acyclic-edge":      (.1784, -.8385, .1644, .4218, -.0470),
    "cyclic-edge":       (.1682, -.8415, .1450, .4276, -.0337),
    "rtype":             (.2654, -.8600, -.0699, -.3479, .0382),
    "cyclic-rtype":      (.2410, -.8602, -.0808, -.3469, .0377),
    "kendall-tau":       (.8808, .1638, -.3775, .1281, .1695),
    "reinsertion":       (.7774, -.1497, -.3070, -.3472, -.0377),
    "deviation":         (.9435, .2332, -.1322, .1491, -.0481),
    "squared-deviation": (.8649, .2099, -.3434, .2236, .1640),
    "lee":               (.7063, .1812, .2619, -.0436, -.6207),
}

# random sampling at length 50 (3628800 draws in the full-scale study)
CORRELATIONS_N50 = _triangle([
    (1.0,),
    (.578, 1.0),
    (.001, .009, 1.0),
    (.000, .009, .980, 1.0),
    (.001, .000, .693, .679, 1.0),
    (-.000, -.000, .679, .693, .980, 1.0),
    (.142, .082, -.000, -.000, .008, .007, 1.0),
    (.140, .074, .060, .059, .176, .172, .532, 1.0),
    (.226, .132, -.000, -.000, -.001, -.001, .944, .555, 1.0),
    (.143, .084, -.000, -.000, -.000, -.001, .995, .501, .949, 1.0),
    (.248, .144, .000, -.000, -.001, -.001, .431, .439, .685, .433, 1.0),
])

EIGENVECTORS_N50 = {
    "exact-match":       (-.160, -.039, -.671, .011, .019),
    "interchange":       (-.113, -.025, -.692, .151, .159),
    "acyclic-edge":      (-.095, .488, -.011, .242, -.335),
    "cyclic-edge":       (-.095, .488, -.010, .242, -.335),
    "rtype":             (-.109, .488, .006, -.194, .309),
    "cyclic-rtype":      (-.108, .488, .006, -.192, .308),
    "kendall-tau":       (-.468, -.110, .163, .309, .166),
    "reinsertion":       (-.355, .002, .063, -.556, .290),
    "deviation":         (-.492, -.119, .083, .099, -.099),
    "squared-deviation": (-.465, -.113, .161, .336, .142),
    "lee":               (-.343, -.081, -.082, -.509, -.647),
}

LOADINGS_N50 = {
    "exact-match":       (-.311, -.072, -.827, .009, .016),
    "interchange":       (-.219, -.046, -.853, .131, .129),
    "acyclic-edge":      (-.185, .893, -.013, .209, -.272),
    "cyclic-edge":       (-.185, .893, -.013, .210, -.272),
    "rtype":             (-.212, .893, .007, -.169, .251),
    "cyclic-rtype":      (-.211, .893, .007, -.167, .250),
    "kendall-tau":       (-.908, -.202, .201, .268, .135),
    "reinsertion":       (-.690, .003, .078, -.482, .236),
    "deviation":         (-.956, -.218, .102, .086, -.080),
    "squared-deviation": (-.903, -.207, .198, .291, .115),
    "lee":               (-.666, -.149, -.100, -.441, -.526),
}

# fitness-distance correlation, 100000 samples, columns L1..L5
FDC_REFERENCE = {
    "exact-match":       (.1548, .1881, .6917, .2974, .4806),
    "interchange":       (.1192, .0886, .5296, .2204, .3665),
    "acyclic-edge":      (.6052, .3474, .0118, .0020, .0186),
    "cyclic-edge":       (.6204, .3822, -.0002, .0006, .0026),
    "rtype":             (.5442, .6333, .0148, .0790, .0136),
    "cyclic-rtype":      (.5562, .6595, -.0016, .0684, .0005),
    "kendall-tau":       (.3423, .2408, .2245, .9022, .3862),
    "reinsertion":       (.3382, .5349, .2080, .6364, .3887),
    "deviation":         (.3898, .1875, .3544, .8410, .6072),
    "squared-deviation": (.3150, .1555, .2282, .8876, .3935),
    "lee":               (.4640, .2316, .3836, .4063, .8619),
}

FDC_ARGMAX = {"L1": "cyclic-edge", "L2": "cyclic-rtype", "L3": "exact-match",
              "L4": "kendall-tau", "L5": "lee"}
