use std::process::ExitCode;

/// Worker threads for the parallel Hochster enumeration; rayon's default
/// when unset.
const THREADS_VAR: &str = "SKELBETTI_THREADS";

fn main() -> ExitCode {
    if let Some(threads) = std::env::var(THREADS_VAR).ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    let code = skelbetti::cli::run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    ExitCode::from(code as u8)
}
