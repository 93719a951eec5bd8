fn main() {
    let out = jnum::cli::run(std::env::args_os());
    let code = out.result.exit_code();
    if code == 2 && !out.rendered.trim_start().starts_with('{') {
        eprint!("{}", out.rendered);
    } else {
        print!("{}", out.rendered);
    }
    std::process::exit(code);
}
