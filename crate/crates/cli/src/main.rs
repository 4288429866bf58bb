use std::io::Write;

fn main() {
    ordercone_cli::configure_threads();
    let outcome = ordercone_cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    print!("{}", outcome.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
