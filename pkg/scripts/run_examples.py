#!/usr/bin/env python3
"""Run the worked examples end to end and print every certified invariant.

Usage: python scripts/run_examples.py
"""
from stanleydec import (
    build_clean_cm2,
    cyclic_module,
    decomposition_from_filtration,
    depth_of_quotient,
    format_ideal,
    glue,
    ideal_sum,
    intersect,
    intersect_all,
    koszul_depth,
    parse_ideal,
    quotient_module,
    ring,
    sdepth_exact,
    stanley_n5,
    verify_decomposition,
    verify_filtration,
)
from stanleydec.depth import hochster_depth_squarefree
from stanleydec.polarize import IdealPair, tilde_step


def show(label, value):
    print(f"  {label:<42} {value}")


def main():
    print("== Cohen-Macaulay dimension-2 pair, three variables ==")
    rc = ring(3, ("x1", "x2", "x3"))
    U = intersect(parse_ideal("[x1, x3^2]", rc), parse_ideal("[x2, x3]", rc))
    I = parse_ideal("[x1*x2]", rc)
    show("U", format_ideal(U))
    show("depth S/U, depth S/I",
         (depth_of_quotient(U), depth_of_quotient(I)))
    show("depth S/(U + (x2))",
         depth_of_quotient(ideal_sum(U, parse_ideal("[x2]", rc))))
    F = build_clean_cm2(U, I)
    v = verify_filtration(F)
    D = decomposition_from_filtration(F)
    show("clean filtration (valid, clean, fdepth)", (v.valid, v.clean, v.fdepth))
    show("induced sdepth", D.sdepth())

    print("== Degree-lowering pair, four variables ==")
    rc4 = ring(4, ("x", "y", "z", "t"))
    Im = parse_ideal("[x^2*z, t^2]", rc4)
    Um = parse_ideal("[x^2, x*y, t^2]", rc4)
    out = tilde_step(IdealPair(Um, Im), 0)
    show("lowered pair", (format_ideal(out.U), format_ideal(out.I)))
    show("depth U/I", koszul_depth(quotient_module(Um, Im)).depth)
    show("depth lowered", koszul_depth(quotient_module(out.U, out.I)).depth)
    show("depth U/(U /\\ lowered I)",
         koszul_depth(quotient_module(Um, intersect(Um, out.I))).depth)

    print("== Characteristic-sensitive squarefree ideal, six variables ==")
    for char in (0, 2):
        rc6 = ring(6, ("a", "b", "c", "d", "e", "f"), char=char)

        def P(*names):
            return parse_ideal("[" + ", ".join(names) + "]", rc6)

        J = intersect_all([P("a", "c", "f"), P("b", "e", "f"),
                           P("c", "d", "e"), P("c", "e", "f")], rc6)
        Ip = intersect_all([J, P("a", "b", "c"), P("a", "b", "e"),
                            P("a", "d", "e"), P("a", "d", "f"),
                            P("b", "c", "d"), P("b", "d", "f")], rc6)
        show(f"char {char}: depth S/I (Koszul, Hochster)",
             (depth_of_quotient(Ip), hochster_depth_squarefree(Ip, char=char)))

    print("== Glued decomposition, four variables ==")
    rcg = ring(4, ("x", "y", "z", "w"))
    Ig = parse_ideal("[x^2*z, x^2*w, y*z, x*y*w]", rcg)
    I1 = parse_ideal("[x*z, x*w, y*z]", rcg)
    s_low, D_low = sdepth_exact(quotient_module(I1, Ig))
    s_up, D_up = sdepth_exact(cyclic_module(I1))
    D = glue(D_low, D_up)
    show("sdepth of I1/I, S/I1", (s_low, s_up))
    show("glued decomposition (valid, sdepth)",
         (verify_decomposition(D).valid, D.sdepth()))
    show("depth S/I", depth_of_quotient(Ig))

    print("== Strict inequality, five variables ==")
    rc5 = ring(5)
    I5 = intersect(parse_ideal("[x1, x2]", rc5),
                   parse_ideal("[x3, x4, x5]", rc5))
    rep = stanley_n5(I5)
    value, _ = sdepth_exact(cyclic_module(I5))
    show("depth, pipeline sdepth lb, exact sdepth",
         (rep.depth, rep.sdepth_lb, value))


if __name__ == "__main__":
    main()
