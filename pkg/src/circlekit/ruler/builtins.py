"""Source text of the built-in ruler programs."""

from __future__ import annotations

from .program import Program, parse

BUILTINS = ("parallel_to_diameter", "parallel_to_line", "problem1", "problem2", "problem3")


def midpoint_parallel(X: str, Y: str, Z: str, M: str, p: str) -> list[str]:
    """Parallel through M to XY, where Z is the known midpoint of XY; the result is ``{p}par``.

    Through M on YD the cevians DZ, XM, YN of triangle DXY concur, so MN is parallel to XY.
    """
    return [
        f"{p}ym = join({Y}, {M})",
        f'{p}D = on_line({p}ym, "past:{M}")',
        f"{p}dz = join({p}D, {Z})",
        f"{p}xm = join({X}, {M})",
        f"{p}P = meet({p}dz, {p}xm)",
        f"{p}yp = join({Y}, {p}P)",
        f"{p}dx = join({p}D, {X})",
        f"{p}N = meet({p}dx, {p}yp)",
        f"{p}par = join({M}, {p}N)",
    ]


def _givens(*names: str) -> list[str]:
    return ["given c : circle_with_center", "given O : point"] + [f"given {n} : point" for n in names]


def _diameter(name: str) -> list[str]:
    return [f'{name} = on_circle("any")', f"{name}O = join({name}, O)", f"{name}x = second_meet({name}O, {name})"]


# two diameters R Rx and U Ux, and parallels to R Rx through U and Ux
RAILS = _diameter("R") + _diameter("U") + midpoint_parallel("R", "Rx", "O", "U", "u_") + midpoint_parallel("R", "Rx", "O", "Ux", "v_")


def parallel(M: str, d: str, p: str) -> list[str]:
    """Parallel through M to an arbitrary line d, using the rails; the result is ``{p}m_par``."""
    return [
        f"{p}Q = meet(RO, {d})",
        f"{p}K = meet(u_par, {d})",
        f"{p}L = meet(v_par, {d})",
    ] + midpoint_parallel(f"{p}K", f"{p}L", f"{p}Q", M, f"{p}m_")


def _source(name: str) -> str:
    if name == "parallel_to_diameter":
        lines = _givens("A", "B", "M") + [
            "bm = join(B, M)",
            'D = on_line(bm, "past:M")',
            "dO = join(D, O)",
            "am = join(A, M)",
            "P = meet(dO, am)",
            "bp = join(B, P)",
            "da = join(D, A)",
            "N = meet(da, bp)",
            "mn = join(M, N)",
            "output mn : parallel_to_diameter",
        ]
    elif name == "parallel_to_line":
        lines = _givens("E", "F", "M") + ["d = join(E, F)"] + RAILS + parallel("M", "d", "p_")
        lines.append("output p_m_par : parallel_to_line")
    elif name == "problem1":
        lines = _givens("A", "B", "C", "M") + _diameter("R")
        for v in "ABC":
            lines += midpoint_parallel("R", "Rx", "O", v, f"{v.lower()}_") + [f"{v}p = second_meet({v.lower()}_par, {v})"]
        for v, (p, q) in zip("ABC", ("BC", "CA", "AB")):
            lines += [f"m{v} = join(M, {v}p)", f"s{v} = join({p}, {q})", f"{v}1 = meet(m{v}, s{v})"]
        lines += ["t = join(A1, B1)", "output t : equal_angles"]
    elif name == "problem2":
        lines = _givens("A", "B", "C", "A1", "B1", "C1") + ["d = join(A1, B1)"] + RAILS + parallel("A", "d", "p_")
        lines += ["Ap = second_meet(p_m_par, A)", "a1ap = join(A1, Ap)", "M = second_meet(a1ap, Ap)"]
        lines.append("output M : concurrent_on_circle")
    elif name == "problem3":
        lines = _givens("A", "B", "C", "Ap") + RAILS
        lines += ['case "BC"', "bc = join(B, C)"] + parallel("Ap", "bc", "p_")
        lines += ["A1 = second_meet(p_m_par, Ap)"]
        # A' on the arc AB away from C: BP parallel to AA', then PA1 parallel to AC; AC mirrors it
        for v, w in (("B", "C"), ("C", "B")):
            lines += [f'case "A{v}"', "aap = join(A, Ap)"] + parallel(v, "aap", "p_")
            lines += [f"P = second_meet(p_m_par, {v})", f"a{w.lower()} = join(A, {w})"]
            lines += parallel("P", f"a{w.lower()}", "q_") + ["A1 = second_meet(q_m_par, P)"]
        lines.append("output A1 : isogonal")
    else:
        raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")
    return "\n".join(lines) + "\n"


def builtin_source(name: str) -> str:
    return _source(name)


def builtin(name: str) -> Program:
    return parse(_source(name), name=name)
