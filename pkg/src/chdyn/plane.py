"""Grid evaluation of dynamical and parameter planes, plus deterministic
PPM / JSON / CSV emission.

Pixel (0, 0) is the top-left corner; pixel centers are
center + ((i+0.5)/nx - 0.5)*width + 1j*((0.5 - (j+0.5)/ny)*height)
with i the column and j the row.  Rendering distributes row bands over
workers; every cell depends only on the spec, so grids are bit-exact across
worker counts.
"""

import concurrent.futures
from dataclasses import dataclass

import numpy as np

from .errors import ChdynError
from .families import ZETA, McMullenParams, build_mcmullen, build_ra
from .lemmas import LemmaCheckResult
from .special import SpecialParamResult
from .trichotomy import JuliaClass, TrichotomyReport, classify_mcmullen, classify_ra, escape_radius

ENGINE_VERSION = "0.1.0"

DYNAMICAL_CH = "dynamical-CH"
DYNAMICAL_MCMULLEN = "dynamical-McMullen"
PARAMETER_CH = "parameter-CH"
PARAMETER_MCMULLEN = "parameter-McMullen"

# cell class codes
CELL_UNRESOLVED = -1
CELL_DEGENERATE = -2
CLASS_CODES = {
    JuliaClass.CANTOR: 0,
    JuliaClass.CANTOR_CIRCLES: 1,
    JuliaClass.SIERPINSKI: 2,
    JuliaClass.UNRESOLVED: CELL_UNRESOLVED,
}

ROOT_COLORS = [(220, 50, 50), (50, 220, 50), (50, 50, 220)]
CLASS_COLORS = {
    0: (200, 40, 40),  # Cantor
    1: (66, 135, 245),  # Cantor circles
    2: (245, 188, 66),  # Sierpinski
    CELL_UNRESOLVED: (0, 0, 0),
    CELL_DEGENERATE: (0, 0, 0),
}


@dataclass(frozen=True)
class PlaneSpec:
    center: complex
    width: float
    nx: int
    ny: int
    kind: str
    max_iter: int = 200
    height: float | None = None
    a: complex | None = None  # CH dynamical family parameter
    mcm: McMullenParams | None = None  # McMullen dynamical parameters
    param_n: int = 4  # McMullen parameter-plane exponents
    param_d: int = 2

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1 or self.width <= 0:
            raise ValueError("need nx, ny >= 1 and width > 0")
        if self.height is None:
            object.__setattr__(self, "height", self.width * self.ny / self.nx)

    def pixel_centers(self, j0, j1):
        """Complex pixel-center array for rows j0..j1-1, shape (j1-j0, nx)."""
        i = np.arange(self.nx)
        j = np.arange(j0, j1)
        re = self.center.real + ((i + 0.5) / self.nx - 0.5) * self.width
        im = self.center.imag + (0.5 - (j + 0.5) / self.ny) * self.height
        return re[None, :] + 1j * im[:, None]


@dataclass
class PlaneGrid:
    spec: PlaneSpec
    classes: np.ndarray  # int, row-major (ny, nx); class code or root index
    iters: np.ndarray  # int, row-major (ny, nx)


def _render_rows_dyn_ch(spec, j0, j1):
    ra = build_ra(spec.a)
    z = spec.pixel_centers(j0, j1)
    shape = z.shape
    roots = np.array([ZETA**j for j in range(3)])
    root_idx = np.full(shape, CELL_UNRESOLVED, dtype=np.int32)
    hit = np.zeros(shape, dtype=np.int32)
    cand = np.full(shape, -1, dtype=np.int32)
    cand_step = np.zeros(shape, dtype=np.int32)
    confirm = np.zeros(shape, dtype=np.int32)
    unresolved = np.ones(shape, dtype=bool)
    # convergence is cubic, so 3 confirmation steps past the first hit suffice
    for k in range(spec.max_iter + 4):
        with np.errstate(invalid="ignore"):
            dist = np.abs(z[..., None] - roots[None, None, :])
            jmin = np.argmin(np.where(np.isnan(dist), np.inf, dist), axis=-1)
            dmin = np.take_along_axis(dist, jmin[..., None], axis=-1)[..., 0]
            within = np.isfinite(dmin) & (dmin < 1e-6)
        has_cand = cand >= 0
        # confirm or drop existing candidates
        still = has_cand & within & (jmin == cand)
        confirm = np.where(still, confirm + 1, confirm)
        done = unresolved & still & (confirm >= 3)
        root_idx[done] = cand[done]
        hit[done] = cand_step[done]
        unresolved &= ~done
        lost = has_cand & ~still
        cand[lost] = -1
        confirm[lost] = 0
        # new candidates
        new = unresolved & within & (cand < 0) & (k <= spec.max_iter)
        cand[new] = jmin[new]
        cand_step[new] = k
        confirm[new] = 0
        if not unresolved.any() or k == spec.max_iter + 3:
            break
        z = ra.eval_grid(z)
    return root_idx, hit


def _render_rows_dyn_mcm(spec, j0, j1):
    M = build_mcmullen(spec.mcm)
    R = escape_radius(spec.mcm)
    z = spec.pixel_centers(j0, j1)
    esc = np.full(z.shape, CELL_UNRESOLVED, dtype=np.int32)
    steps = np.zeros(z.shape, dtype=np.int32)
    active = np.ones(z.shape, dtype=bool)
    for k in range(1, spec.max_iter + 1):
        z = np.where(active, M.eval_grid(np.where(active, z, 1.0)), z)
        with np.errstate(invalid="ignore"):
            out = active & (np.abs(z) > R)
        esc[out] = 0
        steps[out] = k
        active &= ~out
        if not active.any():
            break
    return esc, steps


def _render_rows_param(spec, j0, j1):
    vals = spec.pixel_centers(j0, j1)
    classes = np.full(vals.shape, CELL_UNRESOLVED, dtype=np.int32)
    iters = np.zeros(vals.shape, dtype=np.int32)
    for jj in range(vals.shape[0]):
        for ii in range(vals.shape[1]):
            c = complex(vals[jj, ii])
            try:
                if spec.kind == PARAMETER_CH:
                    rep = classify_ra(c, max_iter=spec.max_iter)
                else:
                    rep = classify_mcmullen(
                        McMullenParams(spec.param_n, spec.param_d, c), max_iter=spec.max_iter
                    )
            except ChdynError:
                classes[jj, ii] = CELL_DEGENERATE
                continue
            classes[jj, ii] = CLASS_CODES[rep.julia_class]
            iters[jj, ii] = rep.m or 0
    return classes, iters


_ROW_FUNCS = {
    DYNAMICAL_CH: _render_rows_dyn_ch,
    DYNAMICAL_MCMULLEN: _render_rows_dyn_mcm,
    PARAMETER_CH: _render_rows_param,
    PARAMETER_MCMULLEN: _render_rows_param,
}


def _render(spec, workers):
    fn = _ROW_FUNCS[spec.kind]
    classes = np.empty((spec.ny, spec.nx), dtype=np.int32)
    iters = np.empty((spec.ny, spec.nx), dtype=np.int32)
    if workers <= 1:
        classes[:], iters[:] = fn(spec, 0, spec.ny)
    else:
        bounds = np.linspace(0, spec.ny, workers + 1, dtype=int)
        bands = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            futs = [pool.submit(fn, spec, a, b) for a, b in bands]
            for (a, b), fut in zip(bands, futs):
                c, it = fut.result()
                classes[a:b], iters[a:b] = c, it
    return PlaneGrid(spec, classes, iters)


def render_dynamical_plane(spec, workers=1):
    """Per-pixel orbit classification of a dynamical plane.

    CH kind records which root of unity the orbit approaches (distance below
    1e-6, confirmed over 3 further steps) and the hitting step; McMullen kind
    records the escape step past the escape radius.  Non-resolved pixels stay
    marked with the unresolved code.
    """
    if spec.kind not in (DYNAMICAL_CH, DYNAMICAL_MCMULLEN):
        raise ValueError(f"not a dynamical spec: {spec.kind}")
    return _render(spec, workers)


def render_parameter_plane(spec, workers=1):
    """Per-pixel trichotomy classification over a parameter window."""
    if spec.kind not in (PARAMETER_CH, PARAMETER_MCMULLEN):
        raise ValueError(f"not a parameter spec: {spec.kind}")
    return _render(spec, workers)


def write_ppm(grid, path):
    """Binary P6 image of the grid, bit-exact across runs and worker counts."""
    spec = grid.spec
    img = np.zeros((spec.ny, spec.nx, 3), dtype=np.uint8)
    if spec.kind in (DYNAMICAL_CH, DYNAMICAL_MCMULLEN):
        f = np.maximum(0.25, 1.0 - grid.iters / spec.max_iter)
        for j, base in enumerate(ROOT_COLORS):
            mask = grid.classes == j
            for c in range(3):
                img[..., c][mask] = np.floor(base[c] * f[mask] + 0.5).astype(np.uint8)
    else:
        for code, color in CLASS_COLORS.items():
            mask = grid.classes == code
            img[mask] = color
    with open(path, "wb") as fh:
        fh.write(f"P6\n{spec.nx} {spec.ny}\n255\n".encode("ascii"))
        fh.write(img.tobytes())


def write_csv(grid, path):
    """Raw cell dump: header i,j,re,im,class,iter, one row per pixel, row-major."""
    spec = grid.spec
    zs = spec.pixel_centers(0, spec.ny)
    lines = ["i,j,re,im,class,iter"]
    for j in range(spec.ny):
        for i in range(spec.nx):
            z = zs[j, i]
            lines.append(
                f"{i},{j},{_fmt_float(z.real)},{_fmt_float(z.imag)},"
                f"{int(grid.classes[j, i])},{int(grid.iters[j, i])}"
            )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def _fmt_float(x):
    return format(float(x), ".17g")


def _json_value(v):
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return _fmt_float(v)
    if isinstance(v, complex):
        return f'"{_fmt_float(v.real)},{_fmt_float(v.imag)}"'
    if isinstance(v, str):
        return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    if isinstance(v, dict):
        items = ", ".join(f'{_json_value(str(k))}: {_json_value(x)}' for k, x in v.items())
        return "{" + items + "}"
    raise TypeError(f"cannot serialize {type(v)}")


def report_document(obj):
    """Ordered report dict for a classification, special-parameter, or lemma result."""
    if isinstance(obj, TrichotomyReport):
        return {
            "kind": "trichotomy",
            "params": obj.params,
            "class": obj.julia_class.value,
            "m": obj.m,
            "events": [[i, k] for i, k in obj.evidence.events],
            "thresholds": dict(obj.thresholds, boundary_adjacent=obj.boundary_adjacent),
            "engine_version": ENGINE_VERSION,
        }
    if isinstance(obj, SpecialParamResult):
        return {
            "kind": obj.kind,
            "params": {},
            "value": obj.value,
            "residual": obj.residual,
            "events": [],
            "thresholds": {"iterations": obj.iterations},
            "engine_version": ENGINE_VERSION,
        }
    if isinstance(obj, LemmaCheckResult):
        return {
            "kind": "lemma:" + obj.lemma_id,
            "params": {"samples": obj.samples, "witness": obj.witness},
            "class": "pass" if obj.passed else "fail",
            "residual": obj.worst_ratio,
            "events": [],
            "thresholds": obj.details,
            "engine_version": ENGINE_VERSION,
        }
    raise TypeError(f"no report layout for {type(obj)}")


def write_report(obj, path):
    """UTF-8 JSON document with fixed key order and 17-significant-digit floats."""
    doc = report_document(obj)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_json_value(doc) + "\n")
