"""Numba-compiled kernels; mirrors kernels._numpy operation for operation."""

from __future__ import annotations

import numpy as np
from numba import njit

OPTIMAL = 0
INFEASIBLE = 1
UNBOUNDED = 2
ITERATION_LIMIT = 3

_AT_LOWER = 0
_AT_UPPER = 1
_BASIC = 2


@njit(cache=True)
def simplex_solve(A, senses, b, c, lb, ub, start_upper, feas_tol=1e-7, opt_tol=1e-9, maxiter=0):
    """Bounded-variable two-phase primal simplex; see kernels._numpy.simplex_solve."""
    m, nv = A.shape
    jmax = nv + m
    ntot = nv + 2 * m
    if maxiter <= 0:
        maxiter = 200 * (m + jmax) + 5000
    bland_after = 5 * (m + jmax)

    T = np.zeros((m, jmax))
    for i in range(m):
        for j in range(nv):
            T[i, j] = A[i, j]
    lbx = np.zeros(ntot)
    ubx = np.zeros(ntot)
    for j in range(nv):
        lbx[j] = lb[j]
        ubx[j] = ub[j]
    vstat = np.full(ntot, _AT_LOWER, dtype=np.int8)
    basis = np.empty(m, dtype=np.int64)
    val = np.zeros(m)
    d1 = np.zeros(jmax)
    d2 = np.zeros(jmax)
    for j in range(nv):
        d2[j] = c[j]

    x0 = np.zeros(nv)
    for j in range(nv):
        if start_upper[j] and ub[j] != np.inf:
            x0[j] = ub[j]
            vstat[j] = _AT_UPPER
        else:
            x0[j] = lb[j]

    z2 = 0.0
    for j in range(nv):
        if x0[j] != 0.0:
            z2 += c[j] * x0[j]

    for i in range(m):
        resid = b[i]
        for j in range(nv):
            if x0[j] != 0.0:
                resid -= A[i, j] * x0[j]
        slack = nv + i
        art = nv + m + i
        sense = senses[i]
        slack_ok = False
        if sense == 0:
            T[i, slack] = 1.0
            ubx[slack] = np.inf
            slack_ok = resid >= 0.0
        elif sense == 1:
            T[i, slack] = -1.0
            ubx[slack] = np.inf
            slack_ok = resid <= 0.0
        else:
            T[i, slack] = 1.0
            slack_ok = resid == 0.0
        if slack_ok:
            basis[i] = slack
            if T[i, slack] < 0.0:
                for jj in range(jmax):
                    T[i, jj] = -T[i, jj]
            val[i] = abs(resid)
            vstat[slack] = _BASIC
        else:
            basis[i] = art
            ubx[art] = np.inf
            if resid < 0.0:
                for jj in range(jmax):
                    T[i, jj] = -T[i, jj]
            val[i] = abs(resid)
            vstat[art] = _BASIC

    z1 = 0.0
    has_artificial = False
    for i in range(m):
        if basis[i] >= nv + m:
            for jj in range(jmax):
                d1[jj] -= T[i, jj]
            z1 += val[i]
            has_artificial = True

    phase = 1 if has_artificial else 2
    if phase == 2:
        for i in range(m):
            ubx[nv + m + i] = 0.0

    iters = 0
    bland = False
    stall = 0
    z_prev = z1 if phase == 1 else z2

    fixed = np.empty(ntot, dtype=np.bool_)
    for j in range(ntot):
        fixed[j] = (ubx[j] - lbx[j]) <= 0.0

    xout = np.zeros(nv)
    dual = np.zeros(nv)
    vout = np.zeros(nv, dtype=np.int8)

    status = OPTIMAL
    while True:
        if iters >= maxiter:
            status = ITERATION_LIMIT
            break

        enter = -1
        if bland:
            for j in range(jmax):
                if vstat[j] == _BASIC or fixed[j]:
                    continue
                dj = d1[j] if phase == 1 else d2[j]
                sc = dj if vstat[j] == _AT_LOWER else -dj
                if sc < -opt_tol:
                    enter = j
                    break
        else:
            best_score = -opt_tol
            for j in range(jmax):
                if vstat[j] == _BASIC or fixed[j]:
                    continue
                dj = d1[j] if phase == 1 else d2[j]
                sc = dj if vstat[j] == _AT_LOWER else -dj
                if sc < best_score:
                    best_score = sc
                    enter = j

        if enter < 0:
            if phase == 1:
                if z1 > feas_tol:
                    status = INFEASIBLE
                    break
                phase = 2
                for i in range(m):
                    art = nv + m + i
                    ubx[art] = 0.0
                    if vstat[art] != _BASIC:
                        fixed[art] = True
                bland = False
                stall = 0
                z_prev = z2
                continue
            status = OPTIMAL
            break

        dirn = 1.0 if vstat[enter] == _AT_LOWER else -1.0
        own_range = ubx[enter] - lbx[enter]

        rows_min = np.inf
        leave = -1
        lcoef = 0.0
        for i in range(m):
            coef_i = T[i, enter]
            delta_i = dirn * coef_i
            if delta_i > 1e-11:
                lo = lbx[basis[i]]
                if lo == -np.inf:
                    continue
                ti = (val[i] - lo) / delta_i
            elif delta_i < -1e-11:
                hi = ubx[basis[i]]
                if hi == np.inf:
                    continue
                ti = (val[i] - hi) / delta_i
            else:
                continue
            if ti < 0.0:
                ti = 0.0
            if ti < rows_min:
                rows_min = ti
                leave = i
                lcoef = abs(coef_i)
            elif ti == rows_min:
                ac = abs(coef_i)
                if ac > lcoef:
                    leave = i
                    lcoef = ac

        if own_range <= rows_min:
            t = own_range
            if t == np.inf:
                status = UNBOUNDED
                break
            for i in range(m):
                val[i] -= (dirn * T[i, enter]) * t
            vstat[enter] = _AT_UPPER if vstat[enter] == _AT_LOWER else _AT_LOWER
            if phase == 1:
                z1 += d1[enter] * dirn * t
            z2 += d2[enter] * dirn * t
        else:
            t = rows_min
            L = basis[leave]
            start = lbx[enter] if vstat[enter] == _AT_LOWER else ubx[enter]
            newval = start + dirn * t
            delta_leave = dirn * T[leave, enter]
            for i in range(m):
                val[i] -= (dirn * T[i, enter]) * t
            vstat[L] = _AT_LOWER if delta_leave > 0.0 else _AT_UPPER
            if L >= nv + m:
                ubx[L] = 0.0
                fixed[L] = True
            elif ubx[L] - lbx[L] <= 0.0:
                fixed[L] = True
            val[leave] = newval
            basis[leave] = enter
            vstat[enter] = _BASIC
            f1 = d1[enter]
            f2 = d2[enter]
            if phase == 1:
                z1 += f1 * dirn * t
            z2 += f2 * dirn * t
            piv = T[leave, enter]
            for jj in range(jmax):
                T[leave, jj] /= piv
            for i in range(m):
                if i == leave:
                    continue
                fi = T[i, enter]
                if fi != 0.0:
                    for jj in range(jmax):
                        T[i, jj] -= fi * T[leave, jj]
            if phase == 1 and f1 != 0.0:
                for jj in range(jmax):
                    d1[jj] -= f1 * T[leave, jj]
            if f2 != 0.0:
                for jj in range(jmax):
                    d2[jj] -= f2 * T[leave, jj]

        iters += 1
        z_cur = z1 if phase == 1 else z2
        if z_cur < z_prev - 1e-12:
            stall = 0
            z_prev = z_cur
        else:
            stall += 1
            if stall > bland_after:
                bland = True

    for j in range(nv):
        dual[j] = d2[j]
        vout[j] = vstat[j]
    if status == OPTIMAL:
        for j in range(nv):
            xout[j] = ubx[j] if vstat[j] == _AT_UPPER else lbx[j]
        for i in range(m):
            if basis[i] < nv:
                xout[basis[i]] = val[i]
        return status, xout, z2, iters, dual, vout
    return status, xout, 0.0, iters, dual, vout


@njit(cache=True)
def enumerate_drdf(indptr, indices, allowed, chk_indptr, chk_indices, best_init):
    """Exhaustive lexicographic DFS; see kernels._numpy.enumerate_drdf."""
    n = len(indptr) - 1
    k = len(allowed)
    f = np.zeros(n, dtype=np.int8)
    choice = np.zeros(n, dtype=np.int8)
    cert = np.full(n, 3, dtype=np.int8)
    best = best_init
    pos = 0
    w = 0
    while pos >= 0:
        if choice[pos] == k:
            pos -= 1
            if pos >= 0:
                w -= allowed[choice[pos]]
                choice[pos] += 1
            continue
        vpos = allowed[choice[pos]]
        if w + vpos >= best:
            choice[pos] = k
            continue
        f[pos] = vpos
        ok = True
        for t in range(chk_indptr[pos], chk_indptr[pos + 1]):
            v = chk_indices[t]
            fv = f[v]
            if fv == 0:
                twos = 0
                good = False
                for s in range(indptr[v], indptr[v + 1]):
                    fu = f[indices[s]]
                    if fu == 3:
                        good = True
                        break
                    if fu == 2:
                        twos += 1
                if not good and twos < 2:
                    ok = False
                    break
            elif fv == 1:
                good = False
                for s in range(indptr[v], indptr[v + 1]):
                    if f[indices[s]] >= 2:
                        good = True
                        break
                if not good:
                    ok = False
                    break
        if not ok:
            choice[pos] += 1
            continue
        if pos == n - 1:
            best = w + vpos
            cert[:] = f
            choice[pos] += 1
            continue
        w += vpos
        pos += 1
        choice[pos] = 0
    return best, cert


@njit(cache=True)
def enumerate_rdf(indptr, indices, chk_indptr, chk_indices, best_init):
    """Exhaustive lexicographic DFS over {0,1,2}; see kernels._numpy.enumerate_rdf."""
    n = len(indptr) - 1
    f = np.zeros(n, dtype=np.int8)
    choice = np.zeros(n, dtype=np.int8)
    cert = np.full(n, 1, dtype=np.int8)
    best = best_init
    pos = 0
    w = 0
    while pos >= 0:
        if choice[pos] == 3:
            pos -= 1
            if pos >= 0:
                w -= choice[pos]
                choice[pos] += 1
            continue
        vpos = choice[pos]
        if w + vpos >= best:
            choice[pos] = 3
            continue
        f[pos] = vpos
        ok = True
        for t in range(chk_indptr[pos], chk_indptr[pos + 1]):
            v = chk_indices[t]
            if f[v] == 0:
                good = False
                for s in range(indptr[v], indptr[v + 1]):
                    if f[indices[s]] == 2:
                        good = True
                        break
                if not good:
                    ok = False
                    break
        if not ok:
            choice[pos] += 1
            continue
        if pos == n - 1:
            best = w + vpos
            cert[:] = f
            choice[pos] += 1
            continue
        w += vpos
        pos += 1
        choice[pos] = 0
    return best, cert
