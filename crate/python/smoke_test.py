"""Smoke test for the maxstn extension module."""

import math

import maxstn


def main():
    star = maxstn.gen_example_star()
    opt = maxstn.exact_opt(star)
    a1 = maxstn.algo_a1(star)
    a2 = maxstn.algo_a2(star)
    assert abs(opt.length - 3.0) < 1e-9
    assert a1.length >= 0.5 * opt.length
    assert a2.length >= maxstn.RHO * opt.length
    assert maxstn.certified_ratio(star, a2) >= maxstn.RHO

    tight = maxstn.gen_tight(20)
    ratio = maxstn.algo_a2(tight).length / maxstn.exact_opt(tight).length
    assert math.sqrt(2 - math.sqrt(3)) < ratio < 0.6

    inst = maxstn.gen_random(6, k_max=3, dim=2, seed=7)
    assert maxstn.Instance.from_json(inst.to_json()).regions() == inst.regions()
    svg = maxstn.render_svg(inst, maxstn.algo_a2(inst))
    assert svg.count("<line ") == inst.n - 1

    ok, rows = maxstn.verify_theory()
    assert ok, [r for r in rows if not r[4]]

    try:
        maxstn.Instance(2, [("X1", [[0.0, 0.0]])])
    except ValueError:
        pass
    else:
        raise AssertionError("single region accepted")

    print(f"smoke test ok: rho={maxstn.RHO:.10f}, tight n=20 ratio={ratio:.6f}")


if __name__ == "__main__":
    main()
