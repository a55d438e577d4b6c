fn main() -> std::process::ExitCode {
    tower_lrc::cli::main()
}
