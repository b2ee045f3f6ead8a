"""CLI invocations with golden transcripts; paths are relative to the repo root."""
import io

from structalg.cli import run

FX = "tests/fixtures"

CASES = {
    "info_quaternions": ["info", "--algebra", "builtin:quaternions"],
    "info_complex_file": ["info", "--algebra", f"{FX}/complex.alg"],
    "info_octonions": ["info", "--algebra", "builtin:octonions"],
    "mul_quaternions": ["mul", "e1", "e2", "--algebra", "builtin:quaternions"],
    "mul_complex_coords": ["mul", "1,1", "1,-1", "--algebra", "builtin:complex"],
    "check_octonions": ["check", "--algebra", "builtin:octonions", "--seed", "0"],
    "check_mat2": ["check", "--algebra", "builtin:mat2", "--samples", "20"],
    "center_quaternions": ["center", "--algebra", "builtin:quaternions"],
    "center_mat2": ["center", "--algebra", "builtin:mat2"],
    "nucleus_octonions": ["nucleus", "--algebra", "builtin:octonions"],
    "bmatrix_complex": ["bmatrix", "--algebra", "builtin:complex"],
    "bmatrix_dual": ["bmatrix", "--algebra", "builtin:dual"],
    "to_tensor_conj": ["to-tensor", "--algebra", "builtin:complex", f"{FX}/conj.map"],
    "to_tensor_delta_complex": ["to-tensor", "--algebra", "builtin:complex", f"{FX}/delta2.map"],
    "to_tensor_lmul_i": ["to-tensor", "--algebra", "builtin:quaternions", f"{FX}/lmul_i.map"],
    "from_tensor_e1e2": ["from-tensor", "--algebra", "builtin:quaternions", f"{FX}/e1e2.tensor"],
    "gens_quaternions": ["gens", "--algebra", "builtin:quaternions"],
    "gens_complex": ["gens", "--algebra", "builtin:complex"],
    "gens_dual": ["gens", "--algebra", "builtin:dual"],
    "orbit_eq_quaternions": ["orbit-eq", "--algebra", "builtin:quaternions", f"{FX}/delta4.map",
                             f"{FX}/e1e2_delta.map"],
    "orbit_eq_complex": ["orbit-eq", "--algebra", "builtin:complex", f"{FX}/delta2.map", f"{FX}/conj.map"],
    "poly_eval_complex": ["poly-eval", "--algebra", "builtin:complex", f"{FX}/mult_complex.poly", "e1", "e1"],
    "poly_check_skew": ["poly-check", "--algebra", "builtin:quaternions", f"{FX}/commutator_quaternions.poly",
                        "--kind", "skew"],
    "poly_check_symmetric_fails": ["poly-check", "--algebra", "builtin:quaternions",
                                   f"{FX}/commutator_quaternions.poly", "--kind", "symmetric"],
    "change_basis_complex": ["change-basis", "--algebra", "builtin:complex", f"{FX}/diag12.map"],
}


def transcript(argv) -> str:
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    text = "$ structalg " + " ".join(argv) + "\n" + out.getvalue()
    if err.getvalue():
        text += "[stderr]\n" + err.getvalue()
    return text + f"[exit {status}]\n"
