use std::env;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Ok(threads) = env::var("LENGTHSMITH_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            // ignore failure: the global pool may already be initialized
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
    let outcome = lengthsmith::cli::run(env::args_os());
    print!("{}", outcome.stdout);
    ExitCode::from(outcome.exit_code.clamp(0, u8::MAX as i32) as u8)
}
