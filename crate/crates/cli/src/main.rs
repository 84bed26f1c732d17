use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
  let (code, text) = gammahom_cli::run(std::env::args_os());
  if code == 0 {
    print!("{text}");
  } else {
    eprint!("{text}");
  }
  let _ = std::io::stdout().flush();
  ExitCode::from(code as u8)
}
