use std::cell::OnceCell;
use std::path::PathBuf;

use crate::algcore::{Algebra, LinearForm, Quotient, Subalgebra};
use crate::exactlin::{FpMatrix, FpVector, PrimeField, Subspace};
use crate::groups::{class_sums, fixed_subalgebra, frobenius_c3xc3_c2, group_algebra, group_algebra_form, FrobeniusSetup};
use crate::quiverlab::{build_comm_presented, build_path_algebra, parse_comm, parse_quiver, PathAlgebra, PresentedAlgebra};

use super::StepError;

const BUNDLED: [(&str, &str); 4] = [
    ("algebra_A.quiver", include_str!("../../../../specs/algebra_A.quiver")),
    ("stable_centre_A.comm", include_str!("../../../../specs/stable_centre_A.comm")),
    ("truncated_xy.comm", include_str!("../../../../specs/truncated_xy.comm")),
    ("truncated_u.comm", include_str!("../../../../specs/truncated_u.comm")),
];

/// Basis of A: `i, j, alpha, beta, beta alpha, gamma, gamma^2, delta, delta^2`.
pub const A_BASIS: [&str; 9] = [
    "i",
    "j",
    "alpha",
    "beta",
    "beta.alpha",
    "gamma",
    "gamma.gamma",
    "delta",
    "delta.delta",
];

/// Basis of Z(A): `1, gamma, gamma^2, delta, delta^2, beta alpha`.
pub const A_CENTRE_BASIS: [&str; 6] = ["1", "gamma", "gamma.gamma", "delta", "delta.delta", "beta.alpha"];

type Cached<T> = OnceCell<Result<T, String>>;

fn get<T>(cell: &Cached<T>, build: impl FnOnce() -> Result<T, StepError>) -> Result<&T, StepError> {
    cell.get_or_init(|| build().map_err(|e| e.0))
        .as_ref()
        .map_err(|e| StepError(e.clone()))
}

/// Shared state of a pipeline run: inputs and lazily built algebras.
pub(crate) struct Ctx {
    pub field: PrimeField,
    specs_dir: Option<PathBuf>,
    a: Cached<PathAlgebra>,
    a_form: Cached<LinearForm>,
    a_centre: Cached<Subalgebra>,
    a_stable: Cached<Quotient>,
    stable_pres: Cached<PresentedAlgebra>,
    xy_pres: Cached<PresentedAlgebra>,
    u_pres: Cached<PresentedAlgebra>,
    frob: OnceCell<FrobeniusSetup>,
    kh: Cached<Algebra>,
    kp: Cached<Algebra>,
    kh_centre: Cached<Subalgebra>,
    kh_stable: Cached<Quotient>,
    kp_fixed: Cached<Subalgebra>,
}

impl Ctx {
    pub fn new(field: PrimeField, specs_dir: Option<PathBuf>) -> Self {
        Ctx {
            field,
            specs_dir,
            a: OnceCell::new(),
            a_form: OnceCell::new(),
            a_centre: OnceCell::new(),
            a_stable: OnceCell::new(),
            stable_pres: OnceCell::new(),
            xy_pres: OnceCell::new(),
            u_pres: OnceCell::new(),
            frob: OnceCell::new(),
            kh: OnceCell::new(),
            kp: OnceCell::new(),
            kh_centre: OnceCell::new(),
            kh_stable: OnceCell::new(),
            kp_fixed: OnceCell::new(),
        }
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    fn spec_text(&self, name: &str) -> Result<String, StepError> {
        match &self.specs_dir {
            Some(dir) => {
                let path = dir.join(name);
                std::fs::read_to_string(&path).map_err(|e| StepError(format!("{}: {e}", path.display())))
            }
            None => Ok(BUNDLED.iter().find(|(n, _)| *n == name).expect("bundled spec").1.to_string()),
        }
    }

    fn presented(&self, name: &str) -> Result<PresentedAlgebra, StepError> {
        let mut spec = parse_comm(&self.spec_text(name)?)?;
        spec.field = self.p();
        Ok(build_comm_presented(&spec)?)
    }

    pub fn a(&self) -> Result<&PathAlgebra, StepError> {
        get(&self.a, || {
            let mut spec = parse_quiver(&self.spec_text("algebra_A.quiver")?)?;
            spec.field = self.p();
            Ok(build_path_algebra(&spec)?)
        })
    }

    pub fn eval_a(&self, text: &str) -> Result<FpVector, StepError> {
        Ok(self.a()?.eval(text)?)
    }

    pub fn eval_all(&self, texts: &[&str]) -> Result<Vec<FpVector>, StepError> {
        texts.iter().map(|t| self.eval_a(t)).collect()
    }

    /// The form with `s(beta alpha) = s(delta^2) = 1`, vanishing on the other
    /// elements of [`A_BASIS`].
    pub fn a_form(&self) -> Result<&LinearForm, StepError> {
        get(&self.a_form, || {
            let values: Vec<u32> = A_BASIS
                .iter()
                .map(|l| u32::from(*l == "beta.alpha" || *l == "delta.delta"))
                .collect();
            form_from_values(self.field, &self.eval_all(&A_BASIS)?, &values)
        })
    }

    pub fn a_centre(&self) -> Result<&Subalgebra, StepError> {
        get(&self.a_centre, || {
            let a = self.a()?.algebra();
            let labels = ["1", "gamma", "gamma^2", "delta", "delta^2", "beta.alpha"];
            Ok(a.subalgebra(&self.eval_all(&A_CENTRE_BASIS)?, labels.map(String::from).to_vec())?)
        })
    }

    /// `Z(A)/Z^pr(A)`.
    pub fn a_stable(&self) -> Result<&Quotient, StepError> {
        get(&self.a_stable, || {
            let a = self.a()?.algebra();
            let higman = a.higman_ideal(self.a_form()?)?;
            stable_quotient(self.a_centre()?, &higman)
        })
    }

    pub fn stable_pres(&self) -> Result<&PresentedAlgebra, StepError> {
        get(&self.stable_pres, || self.presented("stable_centre_A.comm"))
    }

    pub fn xy_pres(&self) -> Result<&PresentedAlgebra, StepError> {
        get(&self.xy_pres, || self.presented("truncated_xy.comm"))
    }

    pub fn u_pres(&self) -> Result<&PresentedAlgebra, StepError> {
        get(&self.u_pres, || self.presented("truncated_u.comm"))
    }

    pub fn frob(&self) -> &FrobeniusSetup {
        self.frob.get_or_init(frobenius_c3xc3_c2)
    }

    pub fn kh(&self) -> Result<&Algebra, StepError> {
        get(&self.kh, || Ok(group_algebra(&self.frob().h, self.p())?))
    }

    pub fn kp(&self) -> Result<&Algebra, StepError> {
        get(&self.kp, || Ok(group_algebra(&self.frob().p, self.p())?))
    }

    pub fn kh_form(&self) -> Result<LinearForm, StepError> {
        Ok(group_algebra_form(&self.frob().h, self.p())?)
    }

    /// `Z(kH)` on the class sums.
    pub fn kh_centre(&self) -> Result<&Subalgebra, StepError> {
        get(&self.kh_centre, || {
            let h = &self.frob().h;
            let labels = h
                .conjugacy_classes()
                .iter()
                .map(|c| c.iter().map(|&x| h.label(x)).collect::<Vec<_>>().join("+"))
                .collect();
            Ok(self.kh()?.subalgebra(&class_sums(h), labels)?)
        })
    }

    pub fn kh_stable(&self) -> Result<&Quotient, StepError> {
        get(&self.kh_stable, || {
            let higman = self.kh()?.higman_ideal(&self.kh_form()?)?;
            stable_quotient(self.kh_centre()?, &higman)
        })
    }

    /// `(kP)^E` on the orbit sums.
    pub fn kp_fixed(&self) -> Result<&Subalgebra, StepError> {
        get(&self.kp_fixed, || Ok(fixed_subalgebra(self.kp()?, self.frob().action.perms())?))
    }

    /// Image in `kH` of an element of `kP`.
    pub fn kp_to_kh(&self, x: &[u32]) -> Result<FpVector, StepError> {
        let mut v = self.kh()?.zero();
        for (g, &c) in x.iter().enumerate() {
            v[self.frob().p_in_h[g]] = c;
        }
        Ok(v)
    }

    /// Image in `Z(kH)/Z^pr(kH)` of a central element of `kH`.
    pub fn kh_to_stable(&self, z: &[u32]) -> Result<FpVector, StepError> {
        let coords = self
            .kh_centre()?
            .coords(z)
            .ok_or_else(|| StepError("element is not central".into()))?;
        Ok(self.kh_stable()?.project(&coords))
    }

    /// Image in `Z(A)/Z^pr(A)` of a central element of `A`.
    pub fn a_to_stable(&self, z: &[u32]) -> Result<FpVector, StepError> {
        let coords = self
            .a_centre()?
            .coords(z)
            .ok_or_else(|| StepError("element is not central".into()))?;
        Ok(self.a_stable()?.project(&coords))
    }
}

/// The linear form taking `values[k]` on `basis[k]`.
pub fn form_from_values(field: PrimeField, basis: &[FpVector], values: &[u32]) -> Result<LinearForm, StepError> {
    let w = FpMatrix::from_rows(field, basis.first().map_or(0, Vec::len), basis)?;
    Ok(LinearForm::new(w.inverse()?.apply_col(values)))
}

/// `Z / I` for an ideal `I` of the ambient algebra lying inside `Z`.
fn stable_quotient(centre: &Subalgebra, ideal: &Subspace) -> Result<Quotient, StepError> {
    let coords = ideal
        .basis_vectors()
        .iter()
        .map(|v| centre.coords(v).ok_or_else(|| StepError("Higman ideal is not central".into())))
        .collect::<Result<Vec<_>, _>>()?;
    let inner = Subspace::span(centre.algebra().field(), centre.algebra().dim(), &coords)?;
    Ok(centre.algebra().quotient(&inner)?)
}

/// Renders a list of elements as `{a, b, ...}`.
pub fn render_elements(a: &Algebra, xs: &[FpVector]) -> String {
    format!("{{{}}}", xs.iter().map(|x| a.format_element(x)).collect::<Vec<_>>().join(", "))
}

pub fn render_dims(dims: &[usize]) -> String {
    dims.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}
