use std::io::Write;

fn main() {
    let env_budget = std::env::var(latfree_cli::BUDGET_ENV).ok();
    let report = latfree_cli::execute(std::env::args_os(), env_budget.as_deref());
    print!("{}", report.stdout);
    eprint!("{}", report.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(report.code);
}
