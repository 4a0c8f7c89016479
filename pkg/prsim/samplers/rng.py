import numpy as np


class Rng:
    """
    Seeded pseudo-random stream backed by numpy's ``PCG64``.

    Uniform draws are generated in blocks and handed out one at a time, since
    the samplers consume single floats in tight loops. Two ``Rng`` objects made
    from the same seed produce the same sequence of draws.

    :param seed: 64-bit seed
    :type seed: int
    :param block_size: Number of floats generated per refill
    :type block_size: int
    """

    def __init__(self, seed=0, block_size=4096, _seed_sequence=None):
        if _seed_sequence is None:
            _seed_sequence = np.random.SeedSequence(seed)
        self._seed_sequence = _seed_sequence
        self._generator = np.random.Generator(np.random.PCG64(_seed_sequence))
        self._block_size = block_size
        self._block = []
        self._pos = 0

    def __repr__(self):
        return (
            f"{self.__class__.__name__}(entropy={self._seed_sequence.entropy}, "
            f"spawn_key={self._seed_sequence.spawn_key})"
        )

    def random(self):
        """
        A uniform float in ``[0, 1)``.
        """
        if self._pos == len(self._block):
            self._block = self._generator.random(self._block_size).tolist()
            self._pos = 0
        value = self._block[self._pos]
        self._pos += 1
        return value

    def random_open(self):
        """
        A uniform float in ``(0, 1)``; exact zeros are redrawn.
        """
        value = self.random()
        while value == 0.0:
            value = self.random()
        return value

    def below(self, k):
        """
        A uniform integer in ``[0, k)``.
        """
        return min(int(self.random() * k), k - 1)

    def spawn(self, count):
        """
        ``count`` independent child streams, identical for identical parents.
        """
        return [
            Rng(block_size=self._block_size, _seed_sequence=child)
            for child in self._seed_sequence.spawn(count)
        ]
