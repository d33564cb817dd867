// Temporary debugging probe; removed before finalizing.
use affstar::fourier::{gaussian, partial_fourier};
use affstar::grid::{GridFunction, GridSpec, Side};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    let spec = GridSpec::new(8.0, 64, 0.125, 8).unwrap();
    let g = gaussian(spec, c(0.0, 0.0), 1.0, c(0.0, 0.0));
    let zg = g.map_pointwise(|v, z, _| v * z);
    let lhs = partial_fourier(&zg).unwrap();

    let n = spec.n_z;
    let k1 = n / 2 + 1; // xi1 = one step above zero
    let k2 = n / 2; // xi2 = 0
    let xi = c(spec.xi_axis(k1), spec.xi_axis(k2));
    println!("xi = {xi}");

    // Brute-force double sum over the z grid at this frequency.
    let h = spec.step_z();
    let mut brute = c(0.0, 0.0);
    for j1 in 0..n {
        for j2 in 0..n {
            let z = c(spec.z_axis(j1), spec.z_axis(j2));
            let phase = -(xi * z.conj()).re;
            brute += Complex64::from_polar(1.0, phase) * z * c((-0.5 * z.norm_sqr()).exp(), 0.0);
        }
    }
    brute *= h * h / std::f64::consts::TAU;

    let fft_value = lhs.data()[lhs.index(k1, k2, 0, 0)];
    let analytic = -c(0.0, 1.0) * xi * c((-0.5 * xi.norm_sqr()).exp(), 0.0);
    println!("brute    = {brute}");
    println!("fft      = {fft_value}");
    println!("analytic = {analytic}");
}
