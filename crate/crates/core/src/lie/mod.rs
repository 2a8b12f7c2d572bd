//! Lie bialgebras, braided-Lie bialgebras and the induction construction.

mod algebra;
mod braided;
mod checks;
mod construct;

pub use algebra::{
    act2, basis_vector, cybe, format_combination, format_tensor_with, outer, q, qr, sl2_standard_r, symmetric_part,
    Cobracket, LieAlgebra, LieBialgebra, Representation, Tensor2, Tensor3, Vector, Q,
};
pub use braided::{
    bisum, bosonise, braiding_operator, psi_from_casimir, self_transmute, transmute, transmute_closed_form, Bisum,
    BraidedLieBialgebra, LieCrossedModule,
};
pub use checks::{check_bialgebra, check_lie_bialgebra, check_quasitriangular, Check, CheckReport};
pub use construct::{
    central_extend, double_bosonise, induction_step, solve_central_charge, toral_rank, CentralExtension, Certificate,
    Induction,
};
