"""Regenerates the bundled synthetic rasters (deterministic).

gridlike*.pgm   dark street grid with equal square blocks
irregular*.pgm  dark Voronoi cell boundaries with uneven cells
*_noisy.pgm     the same structure with gray-level noise and a few dark specks
"""
import numpy as np

SIZE = 96


def write_pgm(path, img):
    h, w = img.shape
    with open(path, "w") as f:
        f.write(f"P2\n{w} {h}\n255\n")
        for row in img:
            f.write(" ".join(str(int(v)) for v in row) + "\n")


def frame(img):
    img[0, :] = img[-1, :] = 0
    img[:, 0] = img[:, -1] = 0


def gridlike():
    img = np.full((SIZE, SIZE), 255, dtype=np.int32)
    for k in range(0, SIZE, 12):
        img[k, :] = 0
        img[:, k] = 0
    frame(img)
    return img


def irregular(rng):
    sites = rng.uniform(0, SIZE, size=(14, 2))
    yy, xx = np.mgrid[0:SIZE, 0:SIZE]
    d = np.sqrt((xx[..., None] - sites[:, 0]) ** 2 + (yy[..., None] - sites[:, 1]) ** 2)
    d.sort(axis=2)
    img = np.where(d[..., 1] - d[..., 0] < 1.0, 0, 255).astype(np.int32)
    frame(img)
    return img


def noisy(img, rng):
    out = img + rng.normal(0, 12, size=img.shape)
    for _ in range(6):
        y, x = rng.integers(2, SIZE - 2, size=2)
        out[y, x] = 0
    return np.clip(np.rint(out), 0, 255).astype(np.int32)


def main():
    rng = np.random.default_rng(20200817)
    g = gridlike()
    i = irregular(rng)
    write_pgm("gridlike.pgm", g)
    write_pgm("gridlike_noisy.pgm", noisy(g, rng))
    write_pgm("irregular.pgm", i)
    write_pgm("irregular_noisy.pgm", noisy(i, rng))


if __name__ == "__main__":
    main()
