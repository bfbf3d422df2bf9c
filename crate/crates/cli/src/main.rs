use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let mut out = String::new();
    let code = cli::run(&args, &mut out);
    print!("{out}");
    ExitCode::from(code as u8)
}
