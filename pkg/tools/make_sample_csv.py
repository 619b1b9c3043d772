"""Write the synthetic diabetes table used by the CLI examples and golden tests.

Usage: python tools/make_sample_csv.py > data/diabetes.csv
"""
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gtminer.prng import Xoshiro256  # noqa: E402


def main(rows=120, seed=7):
    rng = Xoshiro256(seed)
    print("index, obesity, bmi, exercise, fbs, stress, has_diabetes")
    for i in range(1, rows + 1):
        obesity = 1 if rng.random() < 0.35 else 0
        bmi = round(24 + 7 * obesity + rng.uniform(-4, 4), 1)
        exercise = 1 if rng.random() < (0.3 if obesity else 0.6) else 0
        stress = rng.randbelow(5) + 1
        fbs = round(85 + 2.2 * (bmi - 25) - 6 * exercise + 2 * stress + rng.uniform(-8, 8))
        risk = -9.5 + 0.09 * fbs + 0.5 * obesity - 0.6 * exercise
        has_diabetes = 1 if rng.random() < 1 / (1 + math.exp(-risk)) else 0
        print(f"{i}, {obesity}, {bmi}, {exercise}, {fbs}, {stress}, {has_diabetes}")


if __name__ == "__main__":
    main()
