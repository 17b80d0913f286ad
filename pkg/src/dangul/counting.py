"""Exact truncated power series and the generating functions of d-angulations
of girth d (with and without a boundary).

All coefficients are Python ints, so nothing overflows and nothing rounds.
"""
from math import comb, factorial


class ParityViolation(ValueError):
    pass


class TruncatedSeries:
    """Power series c_0 + c_1 x + ... + c_N x^N, known up to order N."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[:order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def x(cls, order):
        return cls([0, 1], order)

    def __getitem__(self, n):
        if n > self.order:
            raise IndexError("coefficient %d beyond order %d" % (n, self.order))
        return self.coeffs[n] if n >= 0 else 0

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return "TruncatedSeries(%r)" % (list(self.coeffs),)

    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise ValueError("order mismatch: %d vs %d" % (self.order, other.order))
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other):
        other = self._lift(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([other * a for a in self.coeffs], self.order)
        other = self._lift(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        out = [0] * (N + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(N + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, N)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k):
        """Multiply by x^k (k >= 0), dropping what falls past the order."""
        return TruncatedSeries([0] * k + list(self.coeffs), self.order)

    def derivative(self):
        """d/dx; the result has order N-1."""
        if self.order == 0:
            return TruncatedSeries([0], 0)
        return TruncatedSeries([n * self.coeffs[n] for n in range(1, self.order + 1)],
                               self.order - 1)

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[:order + 1], order)

    def inverse(self):
        """1/self, requires an invertible constant term of +-1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("constant term must be a unit")
        N = self.order
        out = [0] * (N + 1)
        out[0] = c0
        for n in range(1, N + 1):
            s = sum(self.coeffs[k] * out[n - k] for k in range(1, n + 1))
            out[n] = -s * c0
        return TruncatedSeries(out, N)


def h(j, w):
    """[t^j] 1/(1 - sum_i t^i w_i): compositions of j, w_i marking parts of size i.

    `w` is a sequence w_1, w_2, ...; missing entries are zero.
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    if not w:
        raise ValueError("need at least one variable to fix the order")
    N = w[0].order
    # comp[k] = sum over compositions of k; comp[0] = 1 (empty composition)
    comp = [TruncatedSeries.one(N)]
    for k in range(1, j + 1):
        acc = TruncatedSeries.zero(N)
        for i in range(1, min(k, len(w)) + 1):
            acc = acc + w[i - 1] * comp[k - i]
        comp.append(acc)
    if j == 0:
        return comp[0]
    return comp[j]


def h_p(p, j, w):
    """[t^j] (1 - sum_i t^i w_i)^(-p): p-tuples of compositions of total size j."""
    if p < 1:
        raise ValueError("p must be positive")
    N = w[0].order
    kernel = [h(k, w) for k in range(j + 1)]
    cur = kernel[:]
    for _ in range(p - 1):
        nxt = []
        for k in range(j + 1):
            acc = TruncatedSeries.zero(N)
            for i in range(k + 1):
                acc = acc + cur[i] * kernel[k - i]
            nxt.append(acc)
        cur = nxt
    return cur[j]


def h_j(values, j):
    """h with the argument order (values, j)."""
    return h(j, values)


def h_j_p(p, j, values):
    return h_p(p, j, values)


def solve_W(d, N):
    """Power series W_0..W_{d-2} solving the planted-mobile system to order N.

    W_{d-2} = x (1 + W_0)^{d-1},  W_i = h_{i+2}(W_1..W_{d-2}) for i <= d-3.
    """
    if d < 3:
        raise ValueError("d must be at least 3")
    x = TruncatedSeries.x(N)
    W = [TruncatedSeries.zero(N) for _ in range(d - 1)]
    # the chain W_0 <- W_1.. <- W_{d-2} <- x(..) gains an order every d-1 passes
    for _ in range((N + 1) * (d - 1) + 1):
        new = [None] * (d - 1)
        new[d - 2] = x * (1 + W[0]) ** (d - 1)
        for i in range(d - 2):
            new[i] = h(i + 2, W[1:])
        if new == W:
            break
        W = new
    return W


def solve_V(b, N):
    """Series V_0..V_{b-1} of the bipartite system: V_i plays the role of W_{2i} for d = 2b."""
    if b < 2:
        raise ValueError("b must be at least 2")
    x = TruncatedSeries.x(N)
    V = [TruncatedSeries.zero(N) for _ in range(b)]
    for _ in range((N + 1) * b + 1):
        new = [None] * b
        new[b - 1] = x * (1 + V[0]) ** (2 * b - 1)
        for i in range(b - 1):
            new[i] = h(i + 1, V[1:])
        if new == V:
            break
        V = new
    return V


def F_d(d, N):
    """Corner-rooted d-angulations of girth d, by number of inner faces, to order N."""
    W = solve_W(d, N)
    out = W[d - 2]
    for i in range(d - 2):
        out = out - W[i] * W[d - 2 - i]
    if d % 2 == 0:
        V = solve_V(d // 2, N)
        b = d // 2
        alt = V[b - 1]
        for i in range(b - 1):
            alt = alt - V[i] * V[b - 1 - i]
        assert alt == out, "bipartite shortcut disagrees"
    return out


def F_d_prime(d, N):
    """(1 + W_0)^d, which equals the derivative of F_d."""
    W = solve_W(d, N)
    return (1 + W[0]) ** d


def M_pd(p, d, N):
    """Marked (p,d)-branching mobiles by number of non-special black vertices."""
    if p < d or d < 3:
        raise ValueError("need p >= d >= 3")
    if d % 2 == 0 and p % 2 == 1:
        raise ParityViolation("no p-gonal d-angulation with p odd and d even")
    W = solve_W(d, N)
    return h_p(p, p - d, W[1:])


def F_pd_prime(p, d, N):
    """Derivative of the p-gonal d-angulation series (boundary-rooted, by non-boundary faces)."""
    W = solve_W(d, N)
    out = M_pd(p, d, N) * (1 + W[0]) ** d
    if d % 2 == 0:
        q, b = p // 2, d // 2
        V = solve_V(b, N)
        alt = h_p(p, q - b, V[1:]) * (1 + V[0]) ** d
        assert alt == out, "bipartite form disagrees"
    return out


def _exact_div(a, b):
    q, r = divmod(a, b)
    assert r == 0, "closed form is not integral"
    return q


def brown_t(p, n):
    """Simple p-gonal triangulations with n+p vertices, rooted on the boundary."""
    if p < 3 or n < 0:
        raise ValueError("need p >= 3 and n >= 0")
    lead = _exact_div(2 * factorial(2 * p - 3), factorial(p - 1) * factorial(p - 3))
    return _exact_div(lead * factorial(4 * n + 2 * p - 5),
                      factorial(n) * factorial(3 * n + 2 * p - 3))


def brown_q(p, n):
    """Simple 2p-gonal quadrangulations with n+2p vertices, rooted on the boundary."""
    if p < 2 or n < 0:
        raise ValueError("need p >= 2 and n >= 0")
    lead = _exact_div(3 * factorial(3 * p - 2), factorial(p - 2) * factorial(2 * p - 1))
    return _exact_div(lead * factorial(3 * n + 3 * p - 4),
                      factorial(n) * factorial(2 * n + 3 * p - 2))


def solve_u(k, N):
    """The series u with u = 1 + x u^k, by iteration."""
    x = TruncatedSeries.x(N)
    u = TruncatedSeries.one(N)
    for _ in range(N + 1):
        new = 1 + x * u ** k
        if new == u:
            break
        u = new
    return u


def T_p_series(p, N):
    return comb(2 * p - 4, p - 3) * solve_u(4, N) ** (2 * p - 3)


def Q_p_series(p, N):
    return comb(3 * p - 3, p - 2) * solve_u(3, N) ** (3 * p - 2)
