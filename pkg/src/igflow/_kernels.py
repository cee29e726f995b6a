"""Compiled inner loops: batched tridiagonal solves, interface-state
construction, jump-indicator selection, positivity repair and the
approximate Riemann flux.

Everything here works on contiguous float64 batches shaped (B, n) for
scalar line data or (5, B, F) for face-state stacks.  The wrappers in
the sibling modules own validation, shape handling and error
reporting; kernels communicate failure through status codes instead of
raising so they stay nopython-compatible.
"""

from __future__ import annotations

import numpy as np
from numba import njit

ACCEPT_EPS = 1.0e-20
MP_COEF = 7.0
UL_COEF = 4.0


# ------------------------------------------------------------------
# tridiagonal solves
# ------------------------------------------------------------------

@njit(cache=True)
def tri_factor(sub, diag, sup, invpiv, cprime):
    """LU-factor a shared tridiagonal matrix.

    Returns -1 on success, else the row index of the first zero pivot.
    ``invpiv`` and ``cprime`` receive the reciprocal pivots and the
    scaled superdiagonal used by ``tri_solve_batch``.
    """
    n = diag.shape[0]
    piv = diag[0]
    if piv == 0.0:
        return 0
    invpiv[0] = 1.0 / piv
    cprime[0] = sup[0] * invpiv[0]
    for i in range(1, n):
        piv = diag[i] - sub[i] * cprime[i - 1]
        if piv == 0.0:
            return i
        invpiv[i] = 1.0 / piv
        if i < n - 1:
            cprime[i] = sup[i] * invpiv[i]
    return -1


@njit(cache=True)
def tri_solve_batch(sub, invpiv, cprime, rhs, out):
    """Solve the factored system for every row of ``rhs`` (B, n)."""
    nb, n = rhs.shape
    for b in range(nb):
        out[b, 0] = rhs[b, 0] * invpiv[0]
        for i in range(1, n):
            out[b, i] = (rhs[b, i] - sub[i] * out[b, i - 1]) * invpiv[i]
        for i in range(n - 2, -1, -1):
            out[b, i] = out[b, i] - cprime[i] * out[b, i + 1]


# ------------------------------------------------------------------
# compact-gradient right-hand sides
# ------------------------------------------------------------------

@njit(cache=True)
def compact_rhs_periodic(u, c1, c2, out):
    """out[b,j] = c1*(u[j+1]-u[j-1]) + c2*(u[j+2]-u[j-2]), wrapping."""
    nb, n = u.shape
    for b in range(nb):
        for j in range(n):
            jp1 = j + 1 if j + 1 < n else j + 1 - n
            jp2 = j + 2 if j + 2 < n else j + 2 - n
            jm1 = j - 1 if j - 1 >= 0 else j - 1 + n
            jm2 = j - 2 if j - 2 >= 0 else j - 2 + n
            out[b, j] = c1 * (u[b, jp1] - u[b, jm1]) + c2 * (u[b, jp2] - u[b, jm2])


@njit(cache=True)
def compact_rhs_closed(u, c1, c2, out):
    """Right-hand side on a wall-bounded line.

    Rows 0 and n-1 carry the one-sided third-order closure, rows 1 and
    n-2 the classical fourth-order three-point relation, interior rows
    the scheme's own five-point form.
    """
    nb, n = u.shape
    for b in range(nb):
        out[b, 0] = -2.5 * u[b, 0] + 2.0 * u[b, 1] + 0.5 * u[b, 2]
        out[b, 1] = 0.75 * (u[b, 2] - u[b, 0])
        for j in range(2, n - 2):
            out[b, j] = c1 * (u[b, j + 1] - u[b, j - 1]) + c2 * (
                u[b, j + 2] - u[b, j - 2]
            )
        out[b, n - 2] = 0.75 * (u[b, n - 1] - u[b, n - 3])
        out[b, n - 1] = 2.5 * u[b, n - 1] - 2.0 * u[b, n - 2] - 0.5 * u[b, n - 3]


# ------------------------------------------------------------------
# interface states
# ------------------------------------------------------------------

@njit(cache=True, inline="always")
def _minmod2(a, b):
    if a > 0.0 and b > 0.0:
        return a if a < b else b
    if a < 0.0 and b < 0.0:
        return a if a > b else b
    return 0.0


@njit(cache=True, inline="always")
def _minmod4(a, b, c, d):
    sa = 1.0 if a > 0.0 else (-1.0 if a < 0.0 else 0.0)
    sb = 1.0 if b > 0.0 else (-1.0 if b < 0.0 else 0.0)
    sc = 1.0 if c > 0.0 else (-1.0 if c < 0.0 else 0.0)
    sd = 1.0 if d > 0.0 else (-1.0 if d < 0.0 else 0.0)
    m = abs(a)
    if abs(b) < m:
        m = abs(b)
    if abs(c) < m:
        m = abs(c)
    if abs(d) < m:
        m = abs(d)
    return 0.125 * (sa + sb) * abs((sa + sc) * (sa + sd)) * m


@njit(cache=True)
def mp5_faces(u, g, out_l, out_r):
    """Five-point monotonicity-preserving interface states.

    ``u`` is a ghost-padded line batch (B, m); face f of line b gets
    its left state from donor cell g+f-1 and its right state from
    donor cell g+f.  The right-state arithmetic mirrors the left-state
    arithmetic operation for operation so reflected data produces
    exactly reflected states.
    """
    nb, m = u.shape
    nf = m - 2 * g + 1
    for b in range(nb):
        for f in range(nf):
            # left state, donor j = g + f - 1
            j = g + f - 1
            um2 = u[b, j - 2]
            um1 = u[b, j - 1]
            u0 = u[b, j]
            up1 = u[b, j + 1]
            up2 = u[b, j + 2]
            ulin = (2.0 * um2 - 13.0 * um1 + 47.0 * u0 + 27.0 * up1 - 3.0 * up2) / 60.0
            ump = u0 + _minmod2(up1 - u0, MP_COEF * (u0 - um1))
            if (ulin - u0) * (ulin - ump) <= ACCEPT_EPS:
                out_l[b, f] = ulin
            else:
                dm = um2 - 2.0 * um1 + u0
                d0 = um1 - 2.0 * u0 + up1
                dp = u0 - 2.0 * up1 + up2
                dm4p = _minmod4(4.0 * d0 - dp, 4.0 * dp - d0, d0, dp)
                dm4m = _minmod4(4.0 * d0 - dm, 4.0 * dm - d0, d0, dm)
                uul = u0 + UL_COEF * (u0 - um1)
                uav = 0.5 * (u0 + up1)
                umd = uav - 0.5 * dm4p
                ulc = u0 + 0.5 * (u0 - um1) + (4.0 / 3.0) * dm4m
                lo1 = min(u0, min(up1, umd))
                lo2 = min(u0, min(uul, ulc))
                hi1 = max(u0, max(up1, umd))
                hi2 = max(u0, max(uul, ulc))
                umin = max(lo1, lo2)
                umax = min(hi1, hi2)
                out_l[b, f] = ulin + _minmod2(umin - ulin, umax - ulin)
            # right state, donor j = g + f (mirrored stencil)
            j = g + f
            um2 = u[b, j + 2]
            um1 = u[b, j + 1]
            u0 = u[b, j]
            up1 = u[b, j - 1]
            up2 = u[b, j - 2]
            ulin = (2.0 * um2 - 13.0 * um1 + 47.0 * u0 + 27.0 * up1 - 3.0 * up2) / 60.0
            ump = u0 + _minmod2(up1 - u0, MP_COEF * (u0 - um1))
            if (ulin - u0) * (ulin - ump) <= ACCEPT_EPS:
                out_r[b, f] = ulin
            else:
                dm = um2 - 2.0 * um1 + u0
                d0 = um1 - 2.0 * u0 + up1
                dp = u0 - 2.0 * up1 + up2
                dm4p = _minmod4(4.0 * d0 - dp, 4.0 * dp - d0, d0, dp)
                dm4m = _minmod4(4.0 * d0 - dm, 4.0 * dm - d0, d0, dm)
                uul = u0 + UL_COEF * (u0 - um1)
                uav = 0.5 * (u0 + up1)
                umd = uav - 0.5 * dm4p
                ulc = u0 + 0.5 * (u0 - um1) + (4.0 / 3.0) * dm4m
                lo1 = min(u0, min(up1, umd))
                lo2 = min(u0, min(uul, ulc))
                hi1 = max(u0, max(up1, umd))
                hi2 = max(u0, max(uul, ulc))
                umin = max(lo1, lo2)
                umax = min(hi1, hi2)
                out_r[b, f] = ulin + _minmod2(umin - ulin, umax - ulin)


@njit(cache=True)
def ig_faces(u, du, d2u, g, periodic, out_l, out_r):
    """kappa=1/3 interface states from cell values and scaled derivatives.

    ``u`` is ghost-padded (B, m); ``du`` and ``d2u`` hold interior
    scaled derivatives (B, n).  On periodic lines the derivative index
    wraps; on bounded lines the outermost face takes the adjacent
    ghost cell's value unmodified (the derivative field does not exist
    there, and the jump indicator routes those faces to the
    five-point scheme anyway).
    """
    nb, m = u.shape
    n = m - 2 * g
    nf = n + 1
    for b in range(nb):
        for f in range(nf):
            i = f - 1
            if i < 0:
                if periodic:
                    i += n
                    out_l[b, f] = u[b, g + f - 1] + 0.5 * du[b, i] + d2u[b, i] / 12.0
                else:
                    out_l[b, f] = u[b, g - 1]
            else:
                out_l[b, f] = u[b, g + f - 1] + 0.5 * du[b, i] + d2u[b, i] / 12.0
            i = f
            if i >= n:
                if periodic:
                    i -= n
                    out_r[b, f] = u[b, g + f] - 0.5 * du[b, i] + d2u[b, i] / 12.0
                else:
                    out_r[b, f] = u[b, g + n]
            else:
                out_r[b, f] = u[b, g + f] - 0.5 * du[b, i] + d2u[b, i] / 12.0


@njit(cache=True)
def bvd_select(ul_ig, ur_ig, ul_mp, ur_mp, periodic, out_l, out_r, mask):
    """Pick per face between the linear and the shock-capturing states.

    For every component and line, each interior cell gets a total
    variation measure from each candidate (the sum of that candidate's
    absolute interface jumps on the two faces of the cell).  Cells
    where the five-point candidate measures strictly smaller trigger
    an overwrite of both faces of the cell and its nearest neighbours'
    shared faces, i.e. faces i-1 .. i+2 for cell i.  ``mask`` records
    the overwritten faces per component.
    """
    nc, nb, nf = ul_ig.shape
    n = nf - 1
    for c in range(nc):
        for b in range(nb):
            for f in range(nf):
                out_l[c, b, f] = ul_ig[c, b, f]
                out_r[c, b, f] = ur_ig[c, b, f]
                mask[c, b, f] = 0
            for i in range(n):
                jig = abs(ul_ig[c, b, i] - ur_ig[c, b, i]) + abs(
                    ul_ig[c, b, i + 1] - ur_ig[c, b, i + 1]
                )
                jmp = abs(ul_mp[c, b, i] - ur_mp[c, b, i]) + abs(
                    ul_mp[c, b, i + 1] - ur_mp[c, b, i + 1]
                )
                if jmp < jig:
                    for f in range(i - 1, i + 3):
                        if periodic:
                            # slots 0 and n alias the same physical face
                            fw = f % n
                            mask[c, b, fw] = 1
                            if fw == 0:
                                mask[c, b, n] = 1
                        elif 0 <= f < nf:
                            mask[c, b, f] = 1
            for f in range(nf):
                if mask[c, b, f] == 1:
                    out_l[c, b, f] = ul_mp[c, b, f]
                    out_r[c, b, f] = ur_mp[c, b, f]


@njit(cache=True)
def positivity_repair(wl, wr, wl_mp, wr_mp, u, g, counts):
    """Repair nonphysical face states in place.

    ``wl``/``wr`` are primitive face stacks (5, B, F).  A side with
    nonpositive density or pressure first falls back to the five-point
    candidate, then to the donor cell average.  ``counts`` accumulates
    [sides sent to five-point, sides sent to first-order, fatal cell
    averages, first fatal flat index].
    """
    nb = wl.shape[1]
    nf = wl.shape[2]
    for b in range(nb):
        for f in range(nf):
            if wl[0, b, f] <= 0.0 or wl[4, b, f] <= 0.0:
                counts[0] += 1
                for c in range(5):
                    wl[c, b, f] = wl_mp[c, b, f]
                if wl[0, b, f] <= 0.0 or wl[4, b, f] <= 0.0:
                    counts[1] += 1
                    j = g + f - 1
                    for c in range(5):
                        wl[c, b, f] = u[c, b, j]
                    if wl[0, b, f] <= 0.0 or wl[4, b, f] <= 0.0:
                        if counts[2] == 0:
                            counts[3] = b * nf + f
                        counts[2] += 1
            if wr[0, b, f] <= 0.0 or wr[4, b, f] <= 0.0:
                counts[0] += 1
                for c in range(5):
                    wr[c, b, f] = wr_mp[c, b, f]
                if wr[0, b, f] <= 0.0 or wr[4, b, f] <= 0.0:
                    counts[1] += 1
                    j = g + f
                    for c in range(5):
                        wr[c, b, f] = u[c, b, j]
                    if wr[0, b, f] <= 0.0 or wr[4, b, f] <= 0.0:
                        if counts[2] == 0:
                            counts[3] = b * nf + f
                        counts[2] += 1


# ------------------------------------------------------------------
# approximate Riemann flux
# ------------------------------------------------------------------

@njit(cache=True, inline="always")
def _star_side_flux(rk, unk, pk, ek, ut1, ut2, sk, sm):
    """One-sided star-region flux components (mass, normal momentum,
    both tangential momenta, energy) for acoustic speed ``sk``."""
    coef = (sk - unk) / (sk - sm)
    rs = rk * coef
    es = coef * (ek + (sm - unk) * (rk * sm + pk / (sk - unk)))
    fr_ = rk * unk
    f0 = fr_ + sk * (rs - rk)
    fd = (fr_ * unk + pk) + sk * (rs * sm - rk * unk)
    ft1 = fr_ * ut1 + sk * (rs * ut1 - rk * ut1)
    ft2 = fr_ * ut2 + sk * (rs * ut2 - rk * ut2)
    f4 = unk * (ek + pk) + sk * (es - ek)
    return f0, fd, ft1, ft2, f4


@njit(cache=True)
def hllc_flux_batch(wl, wr, gamma, d, out):
    """HLLC flux from primitive face states (5, B, F), normal axis ``d``.

    ``d`` is the component index of the normal velocity (1, 2 or 3).
    Wave speeds use the square-root-weighted average state bracketed
    with the one-sided signal speeds; the contact speed and star
    states follow the standard momentum-balance form.

    Every expression is arranged so that swapping the two sides and
    negating the normal velocity flips the flux exactly in floating
    point (normal momentum unchanged).  A stalled contact (sm == 0)
    averages the two star fluxes, which that symmetry turns into an
    exact zero of the odd components; without it, a wall-symmetric
    flow would pick one side of the tie and seed asymmetry.
    """
    gm1 = gamma - 1.0
    nb = wl.shape[1]
    nf = wl.shape[2]
    t1 = 1 + (d % 3)
    t2 = 1 + (t1 % 3)
    for b in range(nb):
        for f in range(nf):
            rl = wl[0, b, f]
            ul = wl[1, b, f]
            vl = wl[2, b, f]
            wl_ = wl[3, b, f]
            pl = wl[4, b, f]
            rr = wr[0, b, f]
            ur = wr[1, b, f]
            vr = wr[2, b, f]
            wr_ = wr[3, b, f]
            pr = wr[4, b, f]
            unl = wl[d, b, f]
            unr = wr[d, b, f]
            ql = ul * ul + vl * vl + wl_ * wl_
            qr = ur * ur + vr * vr + wr_ * wr_
            el = pl / gm1 + 0.5 * rl * ql
            er = pr / gm1 + 0.5 * rr * qr
            cl = np.sqrt(gamma * pl / rl)
            cr = np.sqrt(gamma * pr / rr)
            srl = np.sqrt(rl)
            srr = np.sqrt(rr)
            wsum = 1.0 / (srl + srr)
            ua = (srl * ul + srr * ur) * wsum
            va = (srl * vl + srr * vr) * wsum
            wa = (srl * wl_ + srr * wr_) * wsum
            ha = (srl * (el + pl) / rl + srr * (er + pr) / rr) * wsum
            qa = ua * ua + va * va + wa * wa
            ca = np.sqrt(gm1 * (ha - 0.5 * qa))
            una = (srl * unl + srr * unr) * wsum
            sl = min(unl - cl, una - ca)
            sr = max(unr + cr, una + ca)
            # grouped so that swapping the sides and negating the normal
            # velocity negates sm exactly, bit for bit
            sm = (
                (pr + rl * unl * (sl - unl)) - (pl + rr * unr * (sr - unr))
            ) / (rl * (sl - unl) - rr * (sr - unr))
            if sl >= 0.0:
                fr_ = rl * unl
                out[0, b, f] = fr_
                out[1, b, f] = fr_ * ul
                out[2, b, f] = fr_ * vl
                out[3, b, f] = fr_ * wl_
                out[d, b, f] += pl
                out[4, b, f] = unl * (el + pl)
            elif sr <= 0.0:
                fr_ = rr * unr
                out[0, b, f] = fr_
                out[1, b, f] = fr_ * ur
                out[2, b, f] = fr_ * vr
                out[3, b, f] = fr_ * wr_
                out[d, b, f] += pr
                out[4, b, f] = unr * (er + pr)
            elif sm > 0.0:
                f0, fd, ft1, ft2, f4 = _star_side_flux(
                    rl, unl, pl, el, wl[t1, b, f], wl[t2, b, f], sl, sm
                )
                out[0, b, f] = f0
                out[d, b, f] = fd
                out[t1, b, f] = ft1
                out[t2, b, f] = ft2
                out[4, b, f] = f4
            elif sm < 0.0:
                f0, fd, ft1, ft2, f4 = _star_side_flux(
                    rr, unr, pr, er, wr[t1, b, f], wr[t2, b, f], sr, sm
                )
                out[0, b, f] = f0
                out[d, b, f] = fd
                out[t1, b, f] = ft1
                out[t2, b, f] = ft2
                out[4, b, f] = f4
            else:
                l0, ld, lt1, lt2, l4 = _star_side_flux(
                    rl, unl, pl, el, wl[t1, b, f], wl[t2, b, f], sl, sm
                )
                r0, rd, rt1, rt2, r4 = _star_side_flux(
                    rr, unr, pr, er, wr[t1, b, f], wr[t2, b, f], sr, sm
                )
                out[0, b, f] = 0.5 * (l0 + r0)
                out[d, b, f] = 0.5 * (ld + rd)
                out[t1, b, f] = 0.5 * (lt1 + rt1)
                out[t2, b, f] = 0.5 * (lt2 + rt2)
                out[4, b, f] = 0.5 * (l4 + r4)


@njit(cache=True)
def mp5_faces_characteristic(w, g, gamma, d, out_l, out_r):
    """Five-point states built in local characteristic variables.

    ``w`` is a primitive line batch (5, B, m).  Per face the two donor
    cells define a square-root-weighted average state whose primitive
    eigenvector basis (normal axis ``d``) projects the six-cell
    stencil; the scalar five-point limiter runs on each image and the
    result maps back.
    """
    gm1 = gamma - 1.0
    nb = w.shape[1]
    m = w.shape[2]
    nf = m - 2 * g + 1
    t1 = 1 + (d % 3)
    t2 = 1 + (t1 % 3)
    al = np.empty(6)
    ch = np.empty((5, 6))
    for b in range(nb):
        for f in range(nf):
            jl = g + f - 1
            rl = w[0, b, jl]
            rr = w[0, b, jl + 1]
            srl = np.sqrt(rl)
            srr = np.sqrt(rr)
            wsum = 1.0 / (srl + srr)
            ra = srl * srr
            ua = (srl * w[1, b, jl] + srr * w[1, b, jl + 1]) * wsum
            va = (srl * w[2, b, jl] + srr * w[2, b, jl + 1]) * wsum
            wa = (srl * w[3, b, jl] + srr * w[3, b, jl + 1]) * wsum
            pl = w[4, b, jl]
            pr = w[4, b, jl + 1]
            hl = (pl * gamma / gm1 + 0.5 * rl * (w[1, b, jl] ** 2 + w[2, b, jl] ** 2 + w[3, b, jl] ** 2)) / rl
            hr = (pr * gamma / gm1 + 0.5 * rr * (w[1, b, jl + 1] ** 2 + w[2, b, jl + 1] ** 2 + w[3, b, jl + 1] ** 2)) / rr
            ha = (srl * hl + srr * hr) * wsum
            ca2 = gm1 * (ha - 0.5 * (ua * ua + va * va + wa * wa))
            ca = np.sqrt(ca2)
            # project six stencil cells onto characteristic amplitudes
            for s in range(6):
                j = jl - 2 + s
                rho = w[0, b, j]
                un = w[d, b, j]
                p = w[4, b, j]
                ch[0, s] = -0.5 * ra / ca * un + 0.5 / ca2 * p
                ch[1, s] = rho - p / ca2
                ch[2, s] = w[t1, b, j]
                ch[3, s] = w[t2, b, j]
                ch[4, s] = 0.5 * ra / ca * un + 0.5 / ca2 * p
            for k in range(5):
                for s in range(6):
                    al[s] = ch[k, s]
                # left state from cells 0..4 (donor index 2)
                ulin = (2.0 * al[0] - 13.0 * al[1] + 47.0 * al[2] + 27.0 * al[3] - 3.0 * al[4]) / 60.0
                ump = al[2] + _minmod2(al[3] - al[2], MP_COEF * (al[2] - al[1]))
                if (ulin - al[2]) * (ulin - ump) <= ACCEPT_EPS:
                    chl = ulin
                else:
                    dm = al[0] - 2.0 * al[1] + al[2]
                    d0 = al[1] - 2.0 * al[2] + al[3]
                    dp = al[2] - 2.0 * al[3] + al[4]
                    dm4p = _minmod4(4.0 * d0 - dp, 4.0 * dp - d0, d0, dp)
                    dm4m = _minmod4(4.0 * d0 - dm, 4.0 * dm - d0, d0, dm)
                    uul = al[2] + UL_COEF * (al[2] - al[1])
                    uav = 0.5 * (al[2] + al[3])
                    umd = uav - 0.5 * dm4p
                    ulc = al[2] + 0.5 * (al[2] - al[1]) + (4.0 / 3.0) * dm4m
                    umin = max(min(al[2], min(al[3], umd)), min(al[2], min(uul, ulc)))
                    umax = min(max(al[2], max(al[3], umd)), max(al[2], max(uul, ulc)))
                    chl = ulin + _minmod2(umin - ulin, umax - ulin)
                # right state from cells 5..1 (donor index 3)
                ulin = (2.0 * al[5] - 13.0 * al[4] + 47.0 * al[3] + 27.0 * al[2] - 3.0 * al[1]) / 60.0
                ump = al[3] + _minmod2(al[2] - al[3], MP_COEF * (al[3] - al[4]))
                if (ulin - al[3]) * (ulin - ump) <= ACCEPT_EPS:
                    chr_ = ulin
                else:
                    dm = al[5] - 2.0 * al[4] + al[3]
                    d0 = al[4] - 2.0 * al[3] + al[2]
                    dp = al[3] - 2.0 * al[2] + al[1]
                    dm4p = _minmod4(4.0 * d0 - dp, 4.0 * dp - d0, d0, dp)
                    dm4m = _minmod4(4.0 * d0 - dm, 4.0 * dm - d0, d0, dm)
                    uul = al[3] + UL_COEF * (al[3] - al[4])
                    uav = 0.5 * (al[3] + al[2])
                    umd = uav - 0.5 * dm4p
                    ulc = al[3] + 0.5 * (al[3] - al[4]) + (4.0 / 3.0) * dm4m
                    umin = max(min(al[3], min(al[2], umd)), min(al[3], min(uul, ulc)))
                    umax = min(max(al[3], max(al[2], umd)), max(al[3], max(uul, ulc)))
                    chr_ = ulin + _minmod2(umin - ulin, umax - ulin)
                ch[k, 0] = chl
                ch[k, 1] = chr_
            # map back: rho = a1 + a2 + a5, un = (a5 - a1) c/rho_a, p = (a1 + a5) c^2
            for side in range(2):
                a1 = ch[0, side]
                a2 = ch[1, side]
                a3 = ch[2, side]
                a4 = ch[3, side]
                a5 = ch[4, side]
                rho = a1 + a2 + a5
                un = (a5 - a1) * ca / ra
                p = (a1 + a5) * ca2
                if side == 0:
                    out_l[0, b, f] = rho
                    out_l[d, b, f] = un
                    out_l[t1, b, f] = a3
                    out_l[t2, b, f] = a4
                    out_l[4, b, f] = p
                else:
                    out_r[0, b, f] = rho
                    out_r[d, b, f] = un
                    out_r[t1, b, f] = a3
                    out_r[t2, b, f] = a4
                    out_r[4, b, f] = p
