//! Quantitative predictions: multiphoton threshold intensity, soliton
//! dimensions against microscope resolving power, absorption times, and the
//! photoelectric stopping-voltage line.
//!
//! ```bash
//! cargo run -p photon-soliton --example experimental_predictions
//! ```

use photon_soliton::constants::PhysicalConstants;
use photon_soliton::experiments::{
    absorption_time, intrinsic_intensity, photoelectric, resolving_power_gap, soliton_dimensions,
};

fn main() {
    let k = PhysicalConstants::codata2018();

    // Threshold intensity for the onset of multiphoton absorption: the
    // soliton's own mean intensity 4 pi h c^2 / lambda^4.
    println!("multiphoton threshold intensity I_p = 4 pi h c^2 / lambda^4:");
    println!("{:>12} {:>16}", "lambda (m)", "I_p (W/m^2)");
    for lambda in [400e-9, 650e-9, 10.5e-6] {
        println!("{lambda:>12.3e} {:>16.4e}", intrinsic_intensity(lambda, &k).unwrap());
    }

    // Size and the resolving-power comparison.
    let lambda = 650e-9;
    let dims = soliton_dimensions(lambda).unwrap();
    println!("\nsoliton at lambda = {lambda:.2e} m:");
    println!("  length    = {:.4e} m (= lambda)", dims.length);
    println!("  diameter  = {:.4e} m (= lambda/pi)", dims.diameter);
    println!("  aspect    = {:.6} (pi)", dims.aspect_ratio());
    println!(
        "  lambda/pi sits {:.3}% below the classic lambda/3 resolving-power estimate",
        resolving_power_gap() * 100.0
    );

    // Absorption time = period = transit time; femtoseconds for visible light.
    println!("\npredicted absorption (transit) time tau = lambda/c:");
    for lambda in [500e-9, 650e-9, 10.5e-6] {
        println!("  lambda {lambda:>9.3e} m -> tau = {:.4e} s", absorption_time(lambda, &k).unwrap());
    }

    // Photoelectric line: V = (h nu - h nu0)/e above threshold.
    let nu0 = 1e15;
    println!("\nphotoelectric effect with threshold nu0 = {nu0:.1e} Hz:");
    println!("{:>12} {:>8} {:>14} {:>12}", "nu (Hz)", "emits", "KE (J)", "V (V)");
    for nu in [0.5e15, 1.0e15, 1.5e15, 2.0e15, 3.0e15] {
        let result = photoelectric(nu, nu0, &k).unwrap();
        println!(
            "{nu:>12.2e} {:>8} {:>14.4e} {:>12.4}",
            result.emits, result.kinetic_energy, result.stopping_voltage
        );
    }
    println!("slope above threshold: h/e = {:.6e} V s", k.h / k.e_charge);
}
