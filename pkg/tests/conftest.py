import pytest

from wordsums import Morphism, morphic_fixed_point


@pytest.fixture
def thue_morse():
    return morphic_fixed_point(Morphism({0: (0, 1), 1: (1, 0)}), 0)


@pytest.fixture
def fibonacci():
    return morphic_fixed_point(Morphism({0: (0, 1), 1: (0,)}), 0)
