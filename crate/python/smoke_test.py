"""Quick check that the compiled extension imports and agrees with known values.

Build and install first:

    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/infonorm-*.whl
"""

import math

import infonorm


def close(a, b, eps=1e-9):
    return abs(a - b) <= eps


def main():
    q = infonorm.normalize([0.2, 0.3], s=0.1)
    assert close(q[0], 0.4670969344021002) and close(q[1], 0.5329030655978998), q
    assert close(sum(infonorm.normalize_approx([0.2, 0.3], s=0.1)), 1.0)

    prof = infonorm.profile([0.6, 0.2])
    assert close(prof.delta, -0.2) and close(prof.under, 0.2) and prof.h == 0.0

    assert infonorm.shannon([0.5, 0.5]).value == 1.0
    assert close(infonorm.onicescu([0.6, 0.2]).value, 5 / 9)
    assert close(infonorm.tsallis([0.5, 0.5], 2.0).value, 0.5)
    assert close(infonorm.renyi([0.5, 0.5], 2.0).value, math.log(2))
    assert close(infonorm.renyi([0.5, 0.5], 2.0, mode="paper").value, -1.6931471805599453)

    try:
        infonorm.renyi([0.3, 0.5], 1.0, mode="paper")
    except ArithmeticError:
        pass
    else:
        raise AssertionError("literal Rényi at order 1 should fail")

    try:
        infonorm.intuitionistic(0.7, 0.5)
    except ValueError:
        pass
    else:
        raise AssertionError("mu + nu > 1 should be rejected")

    tif, entropy = infonorm.neutrosophic3(0.8, 0.1, 0.1)
    assert close(sum(tif), 1.0) and close(entropy, 0.5816718657178868)
    assert close(infonorm.neutrosophic2(0.7, 0.1, 0.2).truth, 0.7228147176657584)
    assert close(infonorm.imprecise_fuzzy(0.8, 0.25).truth, 0.6757359312880715)
    ifs = infonorm.intuitionistic(0.5, 0.3)
    assert close(ifs.truth, 7 / 12) and close(ifs.entropy, 0.9798687566511528)

    part = infonorm.partition_shannon([0.5, 0.3, 0.2])
    assert part.top == (0.5, 0.3)
    gap, dist, comp = infonorm.partition_nonlog([0.5, 0.3, 0.2])
    assert close(gap, 5 / 6) and close(dist, 0.6979824404521128) and close(comp, 5 / 7)

    print("python smoke test passed")


if __name__ == "__main__":
    main()
