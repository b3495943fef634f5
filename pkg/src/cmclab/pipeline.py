"""End-to-end orchestration: data -> frame -> surfaces -> measurement -> report.

All output files are plain text with numbers at 17 significant digits, so a
repeated run with the same config is bitwise identical except for the human
report, which carries a generation timestamp.  The machine report and the
diagnostics table never do.
"""

from __future__ import annotations

import datetime
from pathlib import Path

import numpy as np

from .errors import InvalidInputError
from .config import RunConfig
from .frames import ExtendedFrame, SpectralParam, integrate_frame, shift_frame
from .measure import measure
from .minkowski import require_h3
from .report import VerificationReport, render_machine, render_text
from .surface_data import (
    GridSpec,
    SurfaceData,
    gauss_residual,
    load_surface_data,
    save_surface_data,
)
from .surfaces import distance_grid, normal_field, surface_primary, surface_shifted
from .verify import verify_theorem

BALL_TOL = 1e-8

SURFACE_FILE = "surface.dat"
FRAME_FILE = "frame.dat"
MESH_PRIMARY_FILE = "mesh_primary.obj"
MESH_SHIFTED_FILE = "mesh_shifted.obj"
DIAGNOSTICS_FILE = "diagnostics.dat"
REPORT_TEXT_FILE = "report.txt"
REPORT_MACHINE_FILE = "report.kv"


def poincare_ball(p):
    """Project hyperboloid points (x1, x2, x3, x0) into the open unit ball.

    b = (x1, x2, x3)/(1 + x0).  Accepts a single point or an array of them.
    """
    p = np.asarray(p, dtype=float)
    require_h3(p, tol=BALL_TOL, what="ball projection input")
    return p[..., :3] / (1.0 + p[..., 3:4])


def generate_data(config: RunConfig) -> SurfaceData:
    """Build the SurfaceData a config describes."""
    if config.family == "cylinder":
        u = np.zeros((config.nx, config.ny))
        return SurfaceData(config.grid(), u, Q=config.Q, H=config.H)
    if config.family == "delaunay":
        from .surface_data import delaunay_data

        return delaunay_data(
            config.grid(), config.H, config.u0, config.du0, step=config.step
        )
    data = load_surface_data(config.input_path)
    return data


def write_mesh(path, points, what="surface"):
    """Wavefront-style quad mesh of ball-projected grid points.

    points has shape (nx, ny, 4); vertices are emitted x fastest, faces as
    1-based quads over each grid cell.
    """
    b = poincare_ball(points)
    nx, ny = b.shape[0], b.shape[1]
    with open(path, "w") as fh:
        fh.write(f"# {what}: Poincare ball vertices, quad faces, row-major in y\n")
        for j in range(ny):
            for i in range(nx):
                fh.write(f"v {b[i, j, 0]:.17g} {b[i, j, 1]:.17g} {b[i, j, 2]:.17g}\n")
        for j in range(ny - 1):
            for i in range(nx - 1):
                a = j * nx + i + 1
                fh.write(f"f {a} {a + 1} {a + 1 + nx} {a + nx}\n")


def write_diagnostics(path, data, frame):
    """Per-point table of measured quantities on the interior grid.

    The boundary ring carries no second-order measurements and is omitted.
    Columns: i j x y E Fc G |Qm| Hm distance-to-shifted gauss-residual.
    """
    prim = surface_primary(frame)
    shif = surface_shifted(frame)
    m = measure(prim, normal_field(frame))
    dist = distance_grid(prim, shif)
    res = gauss_residual(data)
    xs, ys = data.grid.xs(), data.grid.ys()
    with open(path, "w") as fh:
        fh.write("# columns: i j x y E Fc G |Qm| Hm distance-to-shifted gauss-residual\n")
        for j in range(1, data.grid.ny - 1):
            for i in range(1, data.grid.nx - 1):
                row = (
                    f"{i} {j} {xs[i]:.17g} {ys[j]:.17g} "
                    f"{m.E[i, j]:.17g} {m.Fc[i, j]:.17g} {m.G[i, j]:.17g} "
                    f"{abs(m.Qm[i, j]):.17g} {m.Hm[i, j]:.17g} "
                    f"{dist[i, j]:.17g} {res[i, j]:.17g}\n"
                )
                fh.write(row)


def save_frame(path, frame: ExtendedFrame):
    """Frame file: header, grid line, then 8 reals per point (x fastest)."""
    g = frame.grid
    sp = frame.spectral
    with open(path, "w") as fh:
        fh.write(
            "# extended frame: 'lambda r nx ny base_i base_j', "
            "'x_min x_max y_min y_max', rows Re/Im of F00 F01 F10 F11\n"
        )
        fh.write(
            f"{sp.lam:.17g} {sp.r:.17g} {g.nx} {g.ny} "
            f"{frame.base_index[0]} {frame.base_index[1]}\n"
        )
        fh.write(f"{g.x_min:.17g} {g.x_max:.17g} {g.y_min:.17g} {g.y_max:.17g}\n")
        F = frame.F
        for j in range(g.ny):
            for i in range(g.nx):
                vals = []
                for a in range(2):
                    for b in range(2):
                        vals.append(f"{F[i, j, a, b].real:.17g}")
                        vals.append(f"{F[i, j, a, b].imag:.17g}")
                fh.write(" ".join(vals) + "\n")


def load_frame(path) -> ExtendedFrame:
    with open(path) as fh:
        rows = [ln.split() for ln in fh if ln.strip() and not ln.startswith("#")]
    if len(rows) < 2:
        raise InvalidInputError(f"{path}: truncated frame file")
    try:
        lam, r = float(rows[0][0]), float(rows[0][1])
        nx, ny = int(rows[0][2]), int(rows[0][3])
        bi, bj = int(rows[0][4]), int(rows[0][5])
        x_min, x_max, y_min, y_max = (float(v) for v in rows[1][:4])
    except (IndexError, ValueError) as exc:
        raise InvalidInputError(f"{path}: malformed frame header") from exc
    body = rows[2:]
    if len(body) != nx * ny:
        raise InvalidInputError(
            f"{path}: expected {nx * ny} frame rows, found {len(body)}"
        )
    flat = np.array([[float(v) for v in row[:8]] for row in body])
    F = (flat[:, 0::2] + 1j * flat[:, 1::2]).reshape(ny, nx, 2, 2).transpose(1, 0, 2, 3)
    grid = GridSpec(x_min, x_max, y_min, y_max, nx, ny)
    return ExtendedFrame(grid, F, SpectralParam(lam, r), (bi, bj))


def _write_report_files(out: Path, report: VerificationReport):
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
    human = VerificationReport(
        report.records, {**report.metadata, "generated": stamp}
    )
    (out / REPORT_TEXT_FILE).write_text(render_text(human))
    (out / REPORT_MACHINE_FILE).write_text(render_machine(report))


def run(config: RunConfig) -> VerificationReport:
    """Full pipeline; writes every output file and returns the report."""
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    data = generate_data(config)
    if not data.normalized:
        raise InvalidInputError(
            "verification needs normalized data with H = 2Q; "
            f"got H = {data.H}, Q = {data.Q}"
        )
    frame = integrate_frame(data, config.spectral())
    save_surface_data(out / SURFACE_FILE, data)
    save_frame(out / FRAME_FILE, frame)
    write_mesh(out / MESH_PRIMARY_FILE, surface_primary(frame).points, "primary surface")
    write_mesh(out / MESH_SHIFTED_FILE, surface_shifted(frame).points, "shifted surface")
    write_diagnostics(out / DIAGNOSTICS_FILE, data, frame)
    report = verify_theorem(data, frame, tolerances=config.tolerances or None)
    _write_report_files(out, report)
    return report


def load_outputs(in_dir):
    """(SurfaceData, ExtendedFrame) from a run directory."""
    in_dir = Path(in_dir)
    surface_path = in_dir / SURFACE_FILE
    frame_path = in_dir / FRAME_FILE
    for p in (surface_path, frame_path):
        if not p.exists():
            raise FileNotFoundError(f"expected output file not found: {p}")
    return load_surface_data(surface_path), load_frame(frame_path)


def verify_outputs(in_dir) -> VerificationReport:
    """Re-run the theorem checks on stored outputs and refresh the reports."""
    data, frame = load_outputs(in_dir)
    report = verify_theorem(data, frame)
    _write_report_files(Path(in_dir), report)
    return report


def export_meshes(in_dir, model="poincare"):
    """Re-project stored frames to ball meshes; only one model exists."""
    if model != "poincare":
        from .errors import ConfigError

        raise ConfigError(f"unknown export model {model!r}; only 'poincare' exists")
    in_dir = Path(in_dir)
    _, frame = load_outputs(in_dir)
    write_mesh(in_dir / MESH_PRIMARY_FILE, surface_primary(frame).points, "primary surface")
    write_mesh(in_dir / MESH_SHIFTED_FILE, surface_shifted(frame).points, "shifted surface")
    return [in_dir / MESH_PRIMARY_FILE, in_dir / MESH_SHIFTED_FILE]
