use std::io::{self, Write};

fn main() {
    let (stdout, stderr) = (io::stdout(), io::stderr());
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let code = sce_cli::run(std::env::args_os(), sce_cli::max_n_from_env(), &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code as i32);
}
