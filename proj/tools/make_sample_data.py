#!/usr/bin/env python3
"""Regenerates the synthetic sample data in data/.

The game orders are random (fixed seed); only the per-team win/draw/loss
totals follow the 2018 KBO standings as of August 18th, 2018. Opponents and
dates are invented and not mutually consistent across teams.
"""
import datetime
import pathlib
import random

STANDINGS = [
    ("Doosan Bears", 73, 0, 40),
    ("SK Wyverns", 62, 1, 49),
    ("Hanwha Eagles", 62, 0, 52),
    ("Nexen Heroes", 61, 0, 57),
    ("LG Twins", 56, 1, 59),
    ("Samsung Lions", 54, 3, 59),
    ("Lotte Giants", 51, 2, 57),
    ("KIA Tigers", 51, 0, 59),
    ("KT Wiz", 47, 2, 64),
    ("NC Dinos", 47, 1, 68),
]


def game_days(count):
    day = datetime.date(2018, 3, 24)
    out = []
    while len(out) < count:
        if day.weekday() != 0:  # no games on Mondays
            out.append(day)
        day += datetime.timedelta(days=1)
    return out


def main():
    rng = random.Random(2018)
    data = pathlib.Path(__file__).resolve().parent.parent / "data"
    data.mkdir(exist_ok=True)
    rows = []
    for team, w, d, l in STANDINGS:
        results = ["W"] * w + ["D"] * d + ["L"] * l
        rng.shuffle(results)
        others = [t for t, *_ in STANDINGS if t != team]
        for day, res in zip(game_days(len(results)), results):
            rows.append((day.isoformat(), team, rng.choice(others), res))
        if team == "Doosan Bears":
            with open(data / "doosan_2018_synthetic.txt", "w") as f:
                f.write("# states: W D L\n")
                f.write("# synthetic order; totals 73 W, 0 D, 40 L\n")
                for i in range(0, len(results), 20):
                    f.write(" ".join(results[i:i + 20]) + "\n")
    with open(data / "kbo2018_synthetic_ledger.csv", "w") as f:
        f.write("date,team,opponent,result\n")
        for row in rows:
            f.write(",".join(row) + "\n")


if __name__ == "__main__":
    main()
