#![allow(dead_code)]

pub mod brute;

use startrans::groebner::{colon, hilbert_data, intersect};
use startrans::{complex::columns, corpus::Instance, ModuleVector, Submodule};

/// Checks colon, intersection and Hilbert function of one instance against
/// the dense oracle in degrees up to `max_degree` above the lowest twist.
/// Returns the first disagreement.
pub fn crosscheck(inst: &Instance, max_degree: i64) -> Result<usize, String> {
    let f0 = inst.complex.module(0);
    let m = inst.complex.image(1).map_err(|e| e.to_string())?;
    let q = inst.sop.elements();
    let c = colon(&m, q).map_err(|e| e.to_string())?;
    let qf: Vec<ModuleVector> = (0..f0.rank())
        .flat_map(|k| {
            q.iter().map(move |x| {
                let mut v = f0.zero_vector();
                v.coords[k] = x.clone();
                v
            })
        })
        .collect();
    let qf_module = Submodule::new(f0, qf.clone()).map_err(|e| e.to_string())?;
    let meet = intersect(&m, &qf_module).map_err(|e| e.to_string())?;
    let hm = hilbert_data(&m);
    let hc = hilbert_data(&c);
    let lo = f0.degrees().iter().copied().min().unwrap_or(0);
    let mgens = columns(inst.complex.map(1));
    let mut checked = 0;
    for t in lo..=lo + max_degree {
        let want = brute::colon_dim(f0, &mgens, q, t);
        let got = brute::span_dim(f0, c.basis(), t);
        if want != got {
            return Err(format!("{}: colon degree {t}: oracle {want}, kernel {got}", inst.name));
        }
        let want = brute::intersection_dim(f0, &mgens, &qf, t);
        let got = brute::span_dim(f0, meet.basis(), t);
        if want != got {
            return Err(format!(
                "{}: intersection degree {t}: oracle {want}, kernel {got}",
                inst.name
            ));
        }
        let want = brute::hilbert_function(f0, &mgens, t) as i128;
        let got = hm.series.coefficient(t);
        if want != got {
            return Err(format!(
                "{}: HF(F/M) degree {t}: oracle {want}, kernel {got}",
                inst.name
            ));
        }
        let want = brute::hilbert_function(f0, c.basis(), t) as i128;
        let got = hc.series.coefficient(t);
        if want != got {
            return Err(format!(
                "{}: HF(F/M:Q) degree {t}: oracle {want}, kernel {got}",
                inst.name
            ));
        }
        checked += 4;
    }
    for g in c.basis() {
        let ok = q.iter().all(|x| {
            let v = ModuleVector::new(g.coords.iter().map(|p| p * x).collect());
            brute::contains(f0, &mgens, &v)
        });
        if !ok {
            return Err(format!("{}: colon generator {g} is not in M : Q", inst.name));
        }
    }
    Ok(checked)
}
