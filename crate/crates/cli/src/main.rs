use clap::Parser;

fn main() {
    // Clap itself exits with 2 on malformed flags, matching our own
    // usage-error convention.
    let cli = octo_cli::Cli::parse();
    let outcome = octo_cli::run(cli);
    if outcome.code == 2 {
        eprint!("{}", outcome.stdout);
    } else {
        print!("{}", outcome.stdout);
    }
    std::process::exit(outcome.code);
}
