/* Definition-shaped text inside literals and comments must stay invisible. */

static const char *snippet =
	"int fake_string_def(void) { call_me(); }";
static const char open_brace = '{';
static const char close_brace = '}';
static const char *format = "%s(%d) { }";

/* int fake_comment_def(void) { ghost(); } */

// int fake_line_def(void) { ghost(); }

int trap_strings(void)
{
	const char *pattern = "if (x) { while (y) loop_forever(); }";
	return pattern[0] == open_brace || pattern[0] == close_brace;
}
