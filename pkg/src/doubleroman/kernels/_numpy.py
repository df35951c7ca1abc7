"""Pure numpy/Python kernels: the fallback twins of the numba-compiled hot paths.

Both implementations perform the same elementary operations in the same
order, so they return equal results and are interchangeable at runtime.
"""

from __future__ import annotations

import numpy as np

# simplex_solve status codes
OPTIMAL = 0
INFEASIBLE = 1
UNBOUNDED = 2
ITERATION_LIMIT = 3

_AT_LOWER = 0
_AT_UPPER = 1
_BASIC = 2


def simplex_solve(A, senses, b, c, lb, ub, start_upper, feas_tol=1e-7, opt_tol=1e-9, maxiter=0):
    """Bounded-variable two-phase primal simplex on a dense tableau.

    Minimizes c.x subject to A x (senses) b and lb <= x <= ub, where senses
    holds 0 for <=, 1 for >=, 2 for =. Lower bounds must be finite; upper
    bounds may be +inf. `start_upper` marks structurals whose initial
    nonbasic status is at-upper (a crash basis hint); rows satisfied at the
    starting point take their slack into the basis, the rest get an
    artificial column that is dropped for good the moment it leaves.

    Dantzig pricing with lowest-index ties, switching to Bland's rule after
    a stall of 5*(rows+cols) iterations without objective progress; ratio
    ties resolved by largest pivot then lowest row.

    Returns (status, x, objective, iterations, reduced_costs, var_state)
    where reduced_costs/var_state cover the structural columns only.
    """
    m, nv = A.shape
    jmax = nv + m  # structurals + slacks; artificial columns are virtual
    ntot = nv + 2 * m
    if maxiter <= 0:
        maxiter = 200 * (m + jmax) + 5000
    bland_after = 5 * (m + jmax)

    T = np.zeros((m, jmax))
    T[:, :nv] = A
    lbx = np.zeros(ntot)
    ubx = np.zeros(ntot)
    lbx[:nv] = lb
    ubx[:nv] = ub
    vstat = np.full(ntot, _AT_LOWER, dtype=np.int8)
    basis = np.empty(m, dtype=np.int64)
    val = np.zeros(m)
    d1 = np.zeros(jmax)
    d2 = np.zeros(jmax)
    d2[:nv] = c

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
        if sense == 0:  # <=  : A x + s = b, s >= 0
            T[i, slack] = 1.0
            ubx[slack] = np.inf
            slack_ok = resid >= 0.0
        elif sense == 1:  # >= : A x - s = b, s >= 0
            T[i, slack] = -1.0
            ubx[slack] = np.inf
            slack_ok = resid <= 0.0
        else:  # = : slack fixed at zero
            T[i, slack] = 1.0
            slack_ok = resid == 0.0
        if slack_ok:
            basis[i] = slack
            if T[i, slack] < 0.0:
                T[i] = -T[i]
            val[i] = abs(resid)
            vstat[slack] = _BASIC
        else:
            basis[i] = art
            ubx[art] = np.inf
            if resid < 0.0:
                T[i] = -T[i]
            val[i] = abs(resid)
            vstat[art] = _BASIC

    z1 = 0.0
    has_artificial = False
    for i in range(m):
        if basis[i] >= nv + m:
            d1 -= T[i]
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

    fixed = (ubx - lbx) <= 0.0

    def _final(status, xvals, obj):
        return status, xvals, obj, iters, d2[:nv].copy(), vstat[:nv].copy()

    while True:
        if iters >= maxiter:
            return _final(ITERATION_LIMIT, np.zeros(nv), 0.0)

        d = d1 if phase == 1 else d2
        score = np.where(vstat[:jmax] == _AT_LOWER, d, -d)
        score[vstat[:jmax] == _BASIC] = np.inf
        score[fixed[:jmax]] = np.inf
        if bland:
            eligible = score < -opt_tol
            enter = int(np.argmax(eligible)) if eligible.any() else -1
        else:
            enter = int(np.argmin(score))
            if score[enter] >= -opt_tol:
                enter = -1

        if enter < 0:
            if phase == 1:
                if z1 > feas_tol:
                    return _final(INFEASIBLE, np.zeros(nv), 0.0)
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
            break

        dirn = 1.0 if vstat[enter] == _AT_LOWER else -1.0
        own_range = ubx[enter] - lbx[enter]

        coef = T[:, enter]
        delta = dirn * coef
        lbB = lbx[basis]
        ubB = ubx[basis]
        ti = np.full(m, np.inf)
        dn = (delta > 1e-11) & (lbB > -np.inf)
        up = (delta < -1e-11) & (ubB < np.inf)
        ti[dn] = (val[dn] - lbB[dn]) / delta[dn]
        ti[up] = (val[up] - ubB[up]) / delta[up]
        np.maximum(ti, 0.0, out=ti)
        rows_min = ti.min() if m else np.inf

        if own_range <= rows_min:
            t = own_range
            if not np.isfinite(t):
                return _final(UNBOUNDED, np.zeros(nv), 0.0)
            val -= (dirn * coef) * t
            vstat[enter] = _AT_UPPER if vstat[enter] == _AT_LOWER else _AT_LOWER
            if phase == 1:
                z1 += d1[enter] * dirn * t
            z2 += d2[enter] * dirn * t
        else:
            t = rows_min
            cand = ti == rows_min
            acoef = np.where(cand, np.abs(coef), -1.0)
            leave = int(np.argmax(acoef))
            L = basis[leave]
            start = lbx[enter] if vstat[enter] == _AT_LOWER else ubx[enter]
            newval = start + dirn * t
            val -= (dirn * coef) * t
            vstat[L] = _AT_LOWER if delta[leave] > 0.0 else _AT_UPPER
            if L >= nv + m:
                ubx[L] = 0.0  # artificials never come back
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
            colsave = T[:, enter].copy()
            T[leave] /= piv
            colsave[leave] = 0.0
            T -= np.outer(colsave, T[leave])
            if phase == 1 and f1 != 0.0:
                d1 -= f1 * T[leave]
            if f2 != 0.0:
                d2 -= f2 * T[leave]

        iters += 1
        z_cur = z1 if phase == 1 else z2
        if z_cur < z_prev - 1e-12:
            stall = 0
            z_prev = z_cur
        else:
            stall += 1
            if stall > bland_after:
                bland = True

    x = np.where(vstat[:nv] == _AT_UPPER, ubx[:nv], lbx[:nv])
    for i in range(m):
        if basis[i] < nv:
            x[basis[i]] = val[i]
    return _final(OPTIMAL, x, z2)


def enumerate_drdf(indptr, indices, allowed, chk_indptr, chk_indices, best_init):
    """Exhaustive lexicographic DFS over labelings drawn from `allowed`.

    Assigns vertices in index order, checks each vertex as soon as its closed
    neighborhood is fully labeled (checklists supplied as CSR), and prunes on
    partial weight. Returns (best_weight, certificate) where the certificate
    is the lexicographically smallest optimal labeling.
    """
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
            choice[pos] = k  # allowed is ascending: heavier values cannot help
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


def enumerate_rdf(indptr, indices, chk_indptr, chk_indices, best_init):
    """Like enumerate_drdf but for values {0,1,2} with the single-guard rule."""
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
