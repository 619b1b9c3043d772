"""Portable seeded pseudo-random generator.

All randomized routines draw from :class:`Xoshiro256`, an implementation of
xoshiro256** (Blackman & Vigna, 2018) whose 256-bit state is filled from the
integer seed with SplitMix64. Only 64-bit integer arithmetic is involved, so the
stream for a given seed is identical on every platform.

Constants:
    SplitMix64 increment   0x9E3779B97F4A7C15
    SplitMix64 multipliers 0xBF58476D1CE4E5B9, 0x94D049BB133111EB
    xoshiro256** scrambler rotl(s1 * 5, 7) * 9, state shift 17, rotation 45
"""

MASK64 = (1 << 64) - 1


def _rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & MASK64


def splitmix64(state):
    """Advance a SplitMix64 state; returns ``(new_state, output)``."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


class Xoshiro256:
    """xoshiro256** generator with convenience draws used across the package."""

    def __init__(self, seed=42):
        sm = int(seed) & MASK64
        state = []
        for _ in range(4):
            sm, out = splitmix64(sm)
            state.append(out)
        self._s = state

    def next_u64(self):
        s = self._s
        result = (_rotl((s[1] * 5) & MASK64, 7) * 9) & MASK64
        t = (s[1] << 17) & MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def random(self):
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)

    def uniform(self, low, high):
        return low + (high - low) * self.random()

    def randbelow(self, n):
        """Unbiased integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def shuffle(self, items):
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n):
        items = list(range(n))
        self.shuffle(items)
        return items

    def weighted_index(self, weights):
        """Index drawn with probability proportional to the non-negative ``weights``."""
        total = float(sum(weights))
        if total <= 0.0:
            return self.randbelow(len(weights))
        u = self.random() * total
        acc = 0.0
        for i, w in enumerate(weights):
            acc += w
            if u < acc:
                return i
        # rounding can leave u just above the final cumulative sum
        for i in range(len(weights) - 1, -1, -1):
            if weights[i] > 0:
                return i
        return len(weights) - 1
