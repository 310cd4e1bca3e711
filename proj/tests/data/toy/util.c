int g()
{
}
