fn main() {
    let out = polysmith_cli::run(std::env::args_os());
    if out.is_error {
        eprint!("{}", out.text);
        if !out.text.ends_with('\n') {
            eprintln!();
        }
    } else {
        print!("{}", out.text);
        if !out.text.ends_with('\n') {
            println!();
        }
    }
    std::process::exit(out.code);
}
