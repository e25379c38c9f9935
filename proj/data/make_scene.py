"""Writes scene.pgm: a 64x48 synthetic grayscale landscape (sky, horizon, rocks, grain)."""
import math
import random

W, H = 64, 48
rng = random.Random(1997)
rocks = [(rng.uniform(0, W), rng.uniform(28, H), rng.uniform(2, 6)) for _ in range(9)]
pix = []
for y in range(H):
    for x in range(W):
        horizon = 24 + 3 * math.sin(x / 7.0) + 2 * math.cos(x / 3.1)
        if y < horizon:
            v = 170 + 40 * (y / horizon)
        else:
            v = 110 - 30 * ((y - horizon) / (H - horizon))
            for cx, cy, r in rocks:
                d = math.hypot(x - cx, (y - cy) * 1.6)
                if d < r:
                    v = 60 + 70 * (1 - d / r) * (0.5 + 0.5 * math.cos(x + y))
        v += rng.gauss(0, 6)
        pix.append(max(0, min(255, int(round(v)))))
with open("scene.pgm", "wb") as f:
    f.write(b"P5 %d %d 255\n" % (W, H))
    f.write(bytes(pix))
