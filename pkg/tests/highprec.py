"""Independent high-precision oracles used by the test suite.

Everything here is evaluated with the decimal module at 50 significant
digits, from the defining formulas directly, so the values are independent
of the float paths in the package.
"""

from decimal import Decimal, getcontext

getcontext().prec = 50

_LN2 = Decimal(2).ln()


def hp_log2(x: Decimal) -> Decimal:
    return x.ln() / _LN2


def hp_plob(eta) -> Decimal:
    """Point-to-point lossy capacity -log2(1 - eta)."""
    return -hp_log2(1 - Decimal(str(eta)))


def hp_equidistant(loss_db, n_repeaters) -> Decimal:
    """-log2(1 - eta**(1/(N+1))) with eta = 10**(-dB/10), all in Decimal."""
    eta = Decimal(10) ** (-Decimal(str(loss_db)) / 10)
    root = eta ** (Decimal(1) / Decimal(n_repeaters + 1))
    return -hp_log2(1 - root)


def hp_binary_entropy(p) -> Decimal:
    p = Decimal(str(p))
    if p == 0 or p == 1:
        return Decimal(0)
    q = 1 - p
    return -(p * hp_log2(p) + q * hp_log2(q))


def hp_shannon_entropy(probs) -> Decimal:
    total = Decimal(0)
    for p in probs:
        p = Decimal(str(p))
        if p > 0:
            total -= p * hp_log2(p)
    return total
